// Structured results of mathematical checks: one item per grid point and
// named check, with a pass flag and a small bag of detail values.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace chainlls {

struct CheckItem {
    // Grid point the item refers to; (-1, -1) for global items.
    int i = -1;
    int l = -1;
    std::string check;
    bool pass = false;
    std::map<std::string, std::string> details;
};

struct CheckReport {
    std::string name;
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto& it : items) {
            if (!it.pass) return false;
        }
        return true;
    }

    void add(int i, int l, const std::string& check, bool pass,
             std::map<std::string, std::string> details = {}) {
        items.push_back(CheckItem{i, l, check, pass, std::move(details)});
    }
};

}  // namespace chainlls
