#pragma once

#include <initializer_list>
#include <vector>

#include "whittaker/gt_pattern.hpp"
#include "whittaker/half_int.hpp"

namespace testutil {

using whittaker::GTPattern;
using whittaker::HalfInt;
using whittaker::Row;

// Rows given with doubled entries, bottom row first.
inline std::vector<Row> rows2(std::initializer_list<std::initializer_list<int>> doubled) {
    std::vector<Row> out;
    for (auto r : doubled) {
        Row row;
        for (int d : r) row.push_back(HalfInt::from_doubled(d));
        out.push_back(row);
    }
    return out;
}

// Rows given with integer entries.
inline std::vector<Row> rows(std::initializer_list<std::initializer_list<int>> ints) {
    std::vector<Row> out;
    for (auto r : ints) {
        Row row;
        for (int v : r) row.push_back(HalfInt(v));
        out.push_back(row);
    }
    return out;
}

inline GTPattern pattern(std::initializer_list<std::initializer_list<int>> ints) {
    auto r = rows(ints);
    return GTPattern{static_cast<int>(r.back().size()), r};
}

inline std::vector<HalfInt> w(std::initializer_list<int> ints) {
    std::vector<HalfInt> v;
    for (int x : ints) v.push_back(HalfInt(x));
    return v;
}

}  // namespace testutil
