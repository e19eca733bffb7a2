#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphdesign/search.hpp"

namespace graphdesign {

// {"t":3,"k":5,"n":7,"v":21,"lambda":39,"u":"0001..."} without a newline.
std::string to_jsonl(const SolutionRecord& record);

// Throws InvalidInputError on malformed lines or inconsistent fields.
SolutionRecord parse_jsonl(std::string_view line);

void write_jsonl(std::ostream& os, std::span<const SolutionRecord> records);

// Skips blank lines.
std::vector<SolutionRecord> read_jsonl(std::istream& is);

// Header t,k,n,v,lambda,count then one row per (n, lambda).
void write_summary_csv(std::ostream& os, std::span<const SolutionRecord> records);

}  // namespace graphdesign
