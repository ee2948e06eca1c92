#pragma once
#include <optional>
#include <string>
#include <vector>

#include "zonalg/groundset.hpp"

namespace zonalg {

// One job: a configuration plus command-independent options. Parsed from a
// JSON object or, for the matrix alone, whitespace-separated rows.
struct JobSpec {
    std::vector<std::vector<long long>> matrix;  // rows; may be empty for least/parking jobs
    std::optional<std::vector<int>> order;
    std::optional<std::vector<std::vector<long long>>> b0;
    std::optional<std::vector<std::vector<std::string>>> points;  // rationals as "p/q"
    std::optional<std::size_t> graph_n;                           // parking vertex count n
    unsigned seed = 0;
    int degcap = -1;  // -1: N+1

    bool operator==(const JobSpec&) const = default;
};

JobSpec parse_input(const std::string& text);
std::string render(const JobSpec& spec);

// Configuration with the column order applied.
GroundSet ground_of(const JobSpec& spec);

struct RunResult {
    int exit_code = 0;  // 0 pass, 1 verification failure, 2 input error
    std::string output;
};

// command examples: {"hilbert","central"}, {"verify","thm-3.8"}.
RunResult run(const std::vector<std::string>& command, const JobSpec& spec,
              const std::string& format = "json");

}  // namespace zonalg
