#ifndef QUARTIKA_RECORDS_HPP
#define QUARTIKA_RECORDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "quartika/quadruple.hpp"

namespace quartika {

// One emitted solution row. meta carries provenance (parameters, multiple
// index, seed, bound) and never contains commas, so CSV stays simple.
struct OutputRecord {
    std::string source; // family1-2Q | family1-3Q | family2 | pipeline-t1 |
                        // pipeline-41 | pipeline-17 | richmond | search
    Quadruple quad;
    std::string meta;
};

inline constexpr const char* kCsvHeader = "source,n,x,y,z,w,meta";

std::string to_csv(const OutputRecord& rec);
std::string to_json(const OutputRecord& rec);

std::optional<OutputRecord> from_csv(const std::string& line);
std::optional<OutputRecord> from_json(const std::string& line);

} // namespace quartika

#endif
