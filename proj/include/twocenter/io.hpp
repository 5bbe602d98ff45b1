#ifndef TWOCENTER_IO_HPP
#define TWOCENTER_IO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twocenter/circular_hull.hpp"
#include "twocenter/solution.hpp"

namespace twocenter {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    std::vector<Point> points;
    std::string name;
    std::optional<std::uint64_t> seed;
};

/*
 * Text: one "x y" pair per line, '#' starts a comment, blank lines are
 * skipped. JSON: {"points": [[x, y], ...], "name": ..., "seed": ...}. The
 * format is picked by the first non-blank character.
 */
Instance parse_instance(std::string_view text);
Instance read_instance(const std::string& path);

std::string instance_to_text(const Instance& inst);
std::string instance_to_json(const Instance& inst);

/// Doubles at 17 significant digits.
std::string format_double(double v);

struct ResultRecord {
    TwoDiskSolution solution;
    std::optional<double> seconds;
};

std::string result_to_json(const ResultRecord& rec);

/// Parses a record and re-checks it against the points: each disk radius
/// within radius(1+eps) and every point inside its labeled disk. Throws
/// ParseError or VerificationError.
ResultRecord load_result(std::string_view json, const std::vector<Point>& points, double eps = kEps);

std::string hull_to_json(const std::optional<CircularHull>& hull, double r);
std::string coverage_to_json(const Coverage& cov);

enum class InstanceKind { Uniform, TwoCluster, Circle };

/// uniform: unit square. two-cluster: uniform in two unit disks centered at
/// (0, 0) and (4, 0). circle: on the unit circle.
std::vector<Point> generate(InstanceKind kind, std::size_t n, std::uint64_t seed);
InstanceKind parse_kind(std::string_view name);

}  // namespace twocenter

#endif  // TWOCENTER_IO_HPP
