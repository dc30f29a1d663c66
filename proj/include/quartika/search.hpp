#ifndef QUARTIKA_SEARCH_HPP
#define QUARTIKA_SEARCH_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quartika/quadruple.hpp"

namespace quartika {

struct SearchConfig {
    Integer n_min = 1;
    Integer n_max = 1;
    Integer bound = 1; // per-coordinate cap B
    std::set<int> residue_filter = {1, 2, 8, 9}; // empty set disables
    bool fourth_power_free = true;
    bool allow_zero = false; // admit x=0 / z=0 coordinates
    unsigned threads = 1;
    std::string checkpoint; // empty = none
};

struct SearchHit {
    Quadruple quad;
    Integer s; // objective z^4+w^4 = n(x^4+y^4)
};

struct SearchOutcome {
    Integer n;
    std::optional<SearchHit> hit; // empty = NotFound within bounds
};

// mod-16 residue test plus (by default) freedom from fourth-power
// divisors; an empty residue filter disables the residue part.
bool admissible(const Integer& n, const SearchConfig& config);

// Smallest solution for one n: minimal s = z^4+w^4, ties by smaller x
// then smaller z, over 1 <= x <= y <= B, 1 <= z <= w <= B (0 allowed
// with allow_zero). NotFound is a bounds statement, not nonexistence.
SearchOutcome smallest_for_n(const Integer& n, const Integer& bound,
                             bool allow_zero = false);

// Every admissible n in [n_min, n_max], parallel across n, output sorted
// by n. With a checkpoint path, completed n are persisted after each
// finish (full rewrite through a temp file + rename) and skipped on
// resume; an unreadable checkpoint restarts fresh with a warning on
// stderr.
std::vector<SearchOutcome> sweep(const SearchConfig& config);

// Checkpoint line format: n,status,x,y,z,w,s with status hit|notfound.
std::string checkpoint_line(const SearchOutcome& outcome);
std::optional<SearchOutcome> parse_checkpoint_line(const std::string& line);

} // namespace quartika

#endif
