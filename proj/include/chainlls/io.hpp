// Bit-stable serialization: instance JSON, grid JSON with content
// digests, step-trace JSON lines, check-report JSON, verdict JSON, and
// the kernel-dimension table in CSV or JSON form.
//
// Scalars serialize as canonical strings ("p/q", "0" for zero, no "+"),
// matrices as row-major arrays of such strings. All emitters are pure
// functions of their inputs, so identical inputs give identical bytes.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "chainlls/extension.hpp"
#include "chainlls/uniqueness.hpp"

namespace chainlls {

// FNV-1a, 64-bit, over the raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

// 16 lowercase hex digits, zero padded.
std::string hex64(std::uint64_t value);

// {"d":…, "r":…, "field":"rational"|{"prime":p}, "V_X1":[[…]], …} where
// each V_Xq is an (r+1) x (d+1) basis matrix in the chart of its
// component. Reading validates the schema and then runs the full
// refined-series validation, so a parsed instance is always usable.
std::string instance_to_json(const RefinedSeries& h);
RefinedSeries instance_from_json(const std::string& text);

// {"d":…, "field":…, "digest":…, "cells":{"i,l":[[…]], …}}. The digest
// is fnv1a64 over the compact serialization of {d, field, cells} with
// canonical bases, so it identifies the mathematical grid, not the file
// bytes. Reading checks d and field against the instance and verifies
// the digest.
std::string grid_to_json(const RefinedSeries& h, const GridCells& cells);
GridCells grid_from_json(const RefinedSeries& h, const std::string& text);
std::string grid_digest(const RefinedSeries& h, const GridCells& cells);

// One compact JSON object per build step, in build order:
// {"point":[i,l],"step":…,"beta":…,"us":[…],"vs":[…]}.
std::string traces_to_json_lines(const std::vector<StepTrace>& traces);

// {"name":…, "all_pass":…, "items":[{"point":[i,l],"check":…,
// "pass":…, "details":{…}}, …]}. Items with point [-1,-1] are global.
std::string report_to_json(const CheckReport& report);
std::string reports_to_json(const std::vector<CheckReport>& reports);

// {"unique":…, "region":[[i,l],…], "failures":[[i,l,dim],…],
// "corroboration":{…}} with one grid digest per distinct grid found by
// the seeded sweep (two or more witness non-uniqueness).
std::string verdict_to_json(const RefinedSeries& h,
                            const UniquenessVerdict& verdict);

// Triangular table of dim K_il annotated with the interval indices j, k
// (-1 when the index does not exist) and uniqueness-region membership.
// CSV header: i,l,dimK,j,k,in_region (membership printed as 1/0).
std::string grid_table_csv(const RefinedSeries& h, const KernelGrid& kg);
std::string grid_table_json(const RefinedSeries& h, const KernelGrid& kg);

}  // namespace chainlls
