#include "chainlls/io.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

namespace chainlls {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json field_to_value(const Field& f) {
    if (f.p == 0) return "rational";
    return ordered_json{{"prime", f.p}};
}

Field field_from_value(const ordered_json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "rational") return Field::rationals();
        throw Error("unknown field tag \"" + j.get<std::string>() +
                    "\" (expected \"rational\" or {\"prime\": p})");
    }
    if (j.is_object() && j.size() == 1 && j.contains("prime") &&
        j["prime"].is_number_integer())
        return Field::prime(j["prime"].get<std::int64_t>());
    throw Error("malformed field value (expected \"rational\" or "
                "{\"prime\": p})");
}

int int_from_value(const ordered_json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw Error("expected an integer for " + what);
    const long long v = j.get<long long>();
    if (v < -1000000 || v > 1000000)
        throw Error("value out of range for " + what);
    return static_cast<int>(v);
}

ordered_json row_to_value(const RowVec& v) {
    ordered_json row = ordered_json::array();
    for (const Scalar& x : v) row.push_back(x.str());
    return row;
}

ordered_json basis_to_value(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < s.dim(); ++r)
        rows.push_back(row_to_value(s.basis().row(r)));
    return rows;
}

RowVec row_from_value(const Field& f, const ordered_json& j, std::size_t cols,
                      const std::string& what) {
    if (!j.is_array() || j.size() != cols)
        throw Error("expected a row of " + std::to_string(cols) +
                    " scalar strings in " + what);
    RowVec v;
    v.reserve(cols);
    for (const ordered_json& entry : j) {
        if (!entry.is_string())
            throw Error("expected scalar strings in " + what);
        v.push_back(Scalar::parse(f, entry.get<std::string>()));
    }
    return v;
}

std::vector<RowVec> rows_from_value(const Field& f, const ordered_json& j,
                                    std::size_t cols,
                                    const std::string& what) {
    if (!j.is_array()) throw Error("expected a matrix for " + what);
    std::vector<RowVec> rows;
    for (const ordered_json& row : j)
        rows.push_back(row_from_value(f, row, cols, what));
    return rows;
}

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

void require_keys(const ordered_json& doc,
                  const std::vector<std::string>& keys,
                  const std::string& what) {
    if (!doc.is_object()) throw Error(what + " must be a JSON object");
    for (const std::string& key : keys)
        if (!doc.contains(key))
            throw Error(what + " is missing the key \"" + key + "\"");
    if (doc.size() != keys.size())
        for (const auto& item : doc.items()) {
            bool known = false;
            for (const std::string& key : keys) known |= (item.key() == key);
            if (!known)
                throw Error(what + " has an unknown key \"" + item.key() +
                            "\"");
        }
}

std::string cell_key(Multidegree md) {
    return std::to_string(md.i) + "," + std::to_string(md.l);
}

Multidegree cell_key_parse(const std::string& key) {
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
        throw Error("malformed cell key \"" + key + "\" (expected \"i,l\")");
    try {
        std::size_t used = 0;
        const int i = std::stoi(key.substr(0, comma), &used);
        if (used != comma) throw Error("");
        const std::string rest = key.substr(comma + 1);
        const int l = std::stoi(rest, &used);
        if (used != rest.size()) throw Error("");
        return Multidegree{i, l};
    } catch (const std::exception&) {
        throw Error("malformed cell key \"" + key + "\" (expected \"i,l\")");
    }
}

ordered_json point_value(int i, int l) { return ordered_json::array({i, l}); }

// The digest base: {d, field, cells} with canonical bases, compact form.
ordered_json grid_base_value(const RefinedSeries& h, const GridCells& cells) {
    ordered_json doc;
    doc["d"] = h.curve.d;
    doc["field"] = field_to_value(h.field);
    ordered_json cell_obj = ordered_json::object();
    for (const auto& [md, space] : cells)
        cell_obj[cell_key(md)] = basis_to_value(space);
    doc["cells"] = std::move(cell_obj);
    return doc;
}

std::string pretty(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json item_value(const CheckItem& item) {
    ordered_json entry;
    entry["point"] = point_value(item.i, item.l);
    entry["check"] = item.check;
    entry["pass"] = item.pass;
    entry["details"] = ordered_json::object();
    for (const auto& [key, value] : item.details)
        entry["details"][key] = value;
    return entry;
}

ordered_json report_value(const CheckReport& report) {
    ordered_json doc;
    doc["name"] = report.name;
    doc["all_pass"] = report.all_pass();
    doc["items"] = ordered_json::array();
    for (const CheckItem& item : report.items)
        doc["items"].push_back(item_value(item));
    return doc;
}

struct TableRow {
    Multidegree md;
    int dim;
    int j;
    int k;
    bool in_region;
};

std::vector<TableRow> table_rows(const RefinedSeries& h,
                                 const KernelGrid& kg) {
    const std::vector<Multidegree> region = uniqueness_region(h);
    const std::set<Multidegree> in_region(region.begin(), region.end());
    std::vector<TableRow> rows;
    for (Multidegree md : grid_points(h.curve)) {
        const std::optional<int> j = interval_index(h.b, md.i);
        const std::optional<int> k = interval_index(h.bp, md.l);
        rows.push_back(TableRow{md, kg.dim(md), j.value_or(-1),
                                k.value_or(-1),
                                in_region.count(md) > 0});
    }
    return rows;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int pos = 15; pos >= 0; --pos) {
        out[static_cast<std::size_t>(pos)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

std::string instance_to_json(const RefinedSeries& h) {
    ordered_json doc;
    doc["d"] = h.curve.d;
    doc["r"] = h.r;
    doc["field"] = field_to_value(h.field);
    doc["V_X1"] = basis_to_value(h.vx1.space);
    doc["V_X2"] = basis_to_value(h.vx2.space);
    doc["V_X3"] = basis_to_value(h.vx3.space);
    return pretty(doc);
}

RefinedSeries instance_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    require_keys(doc, {"d", "r", "field", "V_X1", "V_X2", "V_X3"},
                 "instance");
    const int d = int_from_value(doc["d"], "\"d\"");
    const int r = int_from_value(doc["r"], "\"r\"");
    if (d < 1) throw Error("\"d\" must be at least 1");
    if (r < 0) throw Error("\"r\" must be nonnegative");
    const Field f = field_from_value(doc["field"]);
    const ChainCurve c(d);
    const std::size_t cols = static_cast<std::size_t>(d) + 1;
    const auto space = [&](const char* key) {
        const std::vector<RowVec> rows =
            rows_from_value(f, doc[key], cols, std::string("\"") + key +
                                                   "\"");
        if (rows.size() != static_cast<std::size_t>(r) + 1)
            throw Error(std::string("\"") + key + "\" must have r+1 rows");
        return Subspace::span(Matrix::from_rows(f, rows, cols));
    };
    return make_refined_series(c, f, r, space("V_X1"), space("V_X2"),
                               space("V_X3"));
}

std::string grid_digest(const RefinedSeries& h, const GridCells& cells) {
    return hex64(fnv1a64(grid_base_value(h, cells).dump()));
}

std::string grid_to_json(const RefinedSeries& h, const GridCells& cells) {
    ordered_json base = grid_base_value(h, cells);
    const std::string digest = hex64(fnv1a64(base.dump()));
    ordered_json doc;
    doc["d"] = base["d"];
    doc["field"] = base["field"];
    doc["digest"] = digest;
    doc["cells"] = std::move(base["cells"]);
    return pretty(doc);
}

GridCells grid_from_json(const RefinedSeries& h, const std::string& text) {
    const ordered_json doc = parse_document(text);
    require_keys(doc, {"d", "field", "digest", "cells"}, "grid");
    if (int_from_value(doc["d"], "\"d\"") != h.curve.d)
        throw Error("grid degree does not match the instance");
    if (field_from_value(doc["field"]).p != h.field.p)
        throw Error("grid field does not match the instance");
    if (!doc["digest"].is_string())
        throw Error("grid \"digest\" must be a string");
    if (!doc["cells"].is_object())
        throw Error("grid \"cells\" must be an object");
    const std::size_t cols = static_cast<std::size_t>(h.curve.d) + 1;
    GridCells cells;
    for (const auto& item : doc["cells"].items()) {
        const Multidegree md = cell_key_parse(item.key());
        require_valid(h.curve, md);
        const std::vector<RowVec> rows = rows_from_value(
            h.field, item.value(), cols, "cell " + item.key());
        cells.emplace(md,
                      Subspace::span(Matrix::from_rows(h.field, rows, cols)));
    }
    if (grid_digest(h, cells) != doc["digest"].get<std::string>())
        throw Error("grid digest mismatch: the file does not describe the "
                    "grid it claims");
    return cells;
}

std::string traces_to_json_lines(const std::vector<StepTrace>& traces) {
    std::string out;
    for (const StepTrace& trace : traces) {
        ordered_json line;
        line["point"] = point_value(trace.md.i, trace.md.l);
        line["step"] = trace.step;
        line["beta"] = trace.beta;
        line["us"] = ordered_json::array();
        for (const RowVec& u : trace.us) line["us"].push_back(row_to_value(u));
        line["vs"] = ordered_json::array();
        for (const RowVec& v : trace.vs) line["vs"].push_back(row_to_value(v));
        out += line.dump();
        out += '\n';
    }
    return out;
}

std::string report_to_json(const CheckReport& report) {
    return pretty(report_value(report));
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    ordered_json doc;
    bool all = true;
    for (const CheckReport& report : reports) all = all && report.all_pass();
    doc["all_pass"] = all;
    doc["reports"] = ordered_json::array();
    for (const CheckReport& report : reports)
        doc["reports"].push_back(report_value(report));
    return pretty(doc);
}

std::string verdict_to_json(const RefinedSeries& h,
                            const UniquenessVerdict& verdict) {
    ordered_json doc;
    doc["unique"] = verdict.unique;
    doc["region"] = ordered_json::array();
    for (Multidegree md : verdict.region)
        doc["region"].push_back(point_value(md.i, md.l));
    doc["failures"] = ordered_json::array();
    for (const auto& [md, dim] : verdict.failures)
        doc["failures"].push_back(ordered_json::array({md.i, md.l, dim}));
    ordered_json cor;
    cor["adaptable"] = verdict.adaptable;
    cor["trials"] = verdict.trials;
    cor["seed"] = verdict.seed;
    cor["witness_found"] = verdict.witness_found;
    cor["no_witness"] = verdict.no_witness;
    if (!verdict.failures.empty()) {
        const Multidegree witness = verdict.failures.front().first;
        cor["witness_cell"] = point_value(witness.i, witness.l);
    }
    cor["distinct_grid_digests"] = ordered_json::array();
    for (const GridCells& cells : verdict.distinct_grids)
        cor["distinct_grid_digests"].push_back(grid_digest(h, cells));
    doc["corroboration"] = std::move(cor);
    return pretty(doc);
}

std::string grid_table_csv(const RefinedSeries& h, const KernelGrid& kg) {
    std::ostringstream out;
    out << "i,l,dimK,j,k,in_region\n";
    for (const TableRow& row : table_rows(h, kg))
        out << row.md.i << ',' << row.md.l << ',' << row.dim << ',' << row.j
            << ',' << row.k << ',' << (row.in_region ? 1 : 0) << '\n';
    return out.str();
}

std::string grid_table_json(const RefinedSeries& h, const KernelGrid& kg) {
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const TableRow& row : table_rows(h, kg)) {
        ordered_json entry;
        entry["i"] = row.md.i;
        entry["l"] = row.md.l;
        entry["dimK"] = row.dim;
        entry["j"] = row.j;
        entry["k"] = row.k;
        entry["in_region"] = row.in_region;
        doc["rows"].push_back(std::move(entry));
    }
    return pretty(doc);
}

}  // namespace chainlls
