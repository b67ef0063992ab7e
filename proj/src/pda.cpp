#include "hotplug/pda.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace hotplug {

std::string PdaLabel::str() const {
    return "(" + format_set(group) + "," + std::to_string(copy) + ")_" + std::to_string(occurrence);
}

Pda Pda::make(int rows, int cols) {
    Pda p;
    p.rows = rows;
    p.cols = cols;
    p.cells.assign(static_cast<size_t>(rows) * cols, std::nullopt);
    p.row_names.resize(rows);
    p.col_names.resize(cols);
    return p;
}

std::string PdaViolation::message() const {
    auto cell = [](std::pair<int, int> c) {
        return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
    };
    switch (kind) {
        case Kind::Ragged:
            return "array is not rectangular";
        case Kind::ColumnStarCount:
            return "column " + std::to_string(cell_a.second) + " has " + std::to_string(actual) +
                   " stars, expected " + std::to_string(expected);
        case Kind::LabelCountMismatch:
            return "array carries " + std::to_string(actual) + " distinct labels, declared " +
                   std::to_string(expected);
        case Kind::SharedRowOrColumn:
            return "equal labels share a row or column at " + cell(cell_a) + " and " + cell(cell_b);
        case Kind::CrossNotStar:
            return "cells " + cell(cell_a) + " and " + cell(cell_b) + " carry equal labels but a crossing cell is not a star";
    }
    return "unknown violation";
}

PdaCheckOutcome verify_pda(const Pda& p, std::optional<long long> declared_labels) {
    if (p.rows <= 0 || p.cols <= 0) throw std::invalid_argument("verify_pda: empty grid");
    if (p.cells.size() != static_cast<size_t>(p.rows) * p.cols) {
        PdaCheckOutcome out;
        out.violation = PdaViolation{PdaViolation::Kind::Ragged};
        return out;
    }

    auto fail = [](PdaViolation viol) {
        PdaCheckOutcome out;
        out.violation = std::move(viol);
        return out;
    };

    // C1: equal star count per column.
    long long z = -1;
    for (int c = 0; c < p.cols; ++c) {
        long long stars = 0;
        for (int r = 0; r < p.rows; ++r)
            if (!p.at(r, c)) ++stars;
        if (z < 0)
            z = stars;
        else if (stars != z)
            return fail({PdaViolation::Kind::ColumnStarCount, {0, c}, {}, z, stars});
    }

    // C3, scanning row-major and checking each labeled cell against every
    // earlier cell with the same label. The first failing pair is reported.
    std::map<PdaLabel, std::vector<std::pair<int, int>>> seen;
    for (int r = 0; r < p.rows; ++r) {
        for (int c = 0; c < p.cols; ++c) {
            const auto& cell = p.at(r, c);
            if (!cell) continue;
            auto& prior = seen[*cell];
            for (const auto& [pr, pc] : prior) {
                if (pr == r || pc == c)
                    return fail({PdaViolation::Kind::SharedRowOrColumn, {pr, pc}, {r, c}, 0, 0});
                if (p.at(pr, c) || p.at(r, pc))
                    return fail({PdaViolation::Kind::CrossNotStar, {pr, pc}, {r, c}, 0, 0});
            }
            prior.emplace_back(r, c);
        }
    }

    const long long s = static_cast<long long>(seen.size());
    if (declared_labels && *declared_labels != s)
        return fail({PdaViolation::Kind::LabelCountMismatch, {}, {}, *declared_labels, s});

    PdaCheckOutcome out;
    out.params = PdaParams{p.cols, p.rows, z, s};
    return out;
}

std::map<PdaLabel, std::vector<std::pair<int, int>>> multicast_groups(const Pda& p) {
    std::map<PdaLabel, std::vector<std::pair<int, int>>> groups;
    for (int r = 0; r < p.rows; ++r)
        for (int c = 0; c < p.cols; ++c)
            if (const auto& cell = p.at(r, c)) groups[*cell].emplace_back(r, c);
    return groups;
}

std::string dump(const Pda& p) {
    std::ostringstream out;
    for (int r = 0; r < p.rows; ++r) {
        for (int c = 0; c < p.cols; ++c) {
            if (c) out << '|';
            const auto& cell = p.at(r, c);
            out << (cell ? cell->str() : "*");
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hotplug
