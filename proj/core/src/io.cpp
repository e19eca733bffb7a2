#include "graphdesign/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include "json.hpp"

#include "graphdesign/error.hpp"

namespace graphdesign {

std::string to_jsonl(const SolutionRecord& record) {
  return "{\"t\":" + std::to_string(record.t) + ",\"k\":" + std::to_string(record.k) +
         ",\"n\":" + std::to_string(record.n) + ",\"v\":" + std::to_string(record.v) +
         ",\"lambda\":" + std::to_string(record.lambda) + ",\"u\":\"" + record.u_string() + "\"}";
}

SolutionRecord parse_jsonl(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("parse_jsonl: ") + e.what());
  }
  SolutionRecord r;
  try {
    r.t = j.at("t").get<int>();
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<int>();
    r.v = j.at("v").get<std::int64_t>();
    r.lambda = j.at("lambda").get<std::int64_t>();
    const auto bits = j.at("u").get<std::string>();
    r.u = parse_u(bits);
    r.width = static_cast<int>(bits.size());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("parse_jsonl: ") + e.what());
  }
  if (r.n < 2 || r.v != static_cast<std::int64_t>(r.n) * (r.n - 1) / 2) {
    throw InvalidInputError("parse_jsonl: v is not C(n,2)");
  }
  return r;
}

void write_jsonl(std::ostream& os, std::span<const SolutionRecord> records) {
  for (const auto& r : records) os << to_jsonl(r) << '\n';
}

std::vector<SolutionRecord> read_jsonl(std::istream& is) {
  std::vector<SolutionRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_jsonl(line));
  }
  return out;
}

void write_summary_csv(std::ostream& os, std::span<const SolutionRecord> records) {
  std::map<std::tuple<int, int, int, std::int64_t, std::int64_t>, std::uint64_t> counts;
  for (const auto& r : records) ++counts[{r.t, r.k, r.n, r.v, r.lambda}];
  os << "t,k,n,v,lambda,count\n";
  for (const auto& [key, count] : counts) {
    const auto& [t, k, n, v, lambda] = key;
    os << t << ',' << k << ',' << n << ',' << v << ',' << lambda << ',' << count << '\n';
  }
}

}  // namespace graphdesign
