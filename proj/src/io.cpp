#include "twocenter/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

namespace twocenter {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view tok, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError("line " + std::to_string(line) + ": bad number '" + std::string(tok) + "'");
    }
    return v;
}

Instance parse_text(std::string_view text) {
    Instance inst;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::string_view> toks;
        while (!line.empty()) {
            std::size_t end = 0;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) && line[end] != ',') ++end;
            if (end > 0) toks.push_back(line.substr(0, end));
            line = trim(line.substr(std::min(end + 1, line.size())));
        }
        if (toks.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two coordinates");
        }
        inst.points.push_back({parse_number(toks[0], line_no), parse_number(toks[1], line_no)});
    }
    return inst;
}

double finite(const json& v) {
    if (!v.is_number()) throw ParseError("expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError("non-finite number");
    return d;
}

Instance parse_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
        throw ParseError("expected an object with a \"points\" array");
    }
    Instance inst;
    for (const auto& p : doc["points"]) {
        if (!p.is_array() || p.size() != 2) throw ParseError("each point must be [x, y]");
        inst.points.push_back({finite(p[0]), finite(p[1])});
    }
    if (doc.contains("name") && doc["name"].is_string()) inst.name = doc["name"].get<std::string>();
    if (doc.contains("seed") && doc["seed"].is_number_unsigned()) inst.seed = doc["seed"].get<std::uint64_t>();
    return inst;
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string disk_json(const Disk& d) {
    return "{\"cx\": " + format_double(d.center.x) + ", \"cy\": " + format_double(d.center.y) +
           ", \"r\": " + format_double(d.radius) + "}";
}

Disk disk_from(const json& j) {
    if (!j.is_object()) throw ParseError("disk must be an object");
    return Disk{{finite(j.at("cx")), finite(j.at("cy"))}, finite(j.at("r"))};
}

}  // namespace

Instance parse_instance(std::string_view text) {
    const std::string_view t = trim(text);
    if (!t.empty() && t.front() == '{') return parse_json(t);
    return parse_text(text);
}

Instance read_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string instance_to_text(const Instance& inst) {
    std::string out;
    if (!inst.name.empty()) out += "# " + inst.name + "\n";
    if (inst.seed) out += "# seed " + std::to_string(*inst.seed) + "\n";
    for (const Point& p : inst.points) out += format_double(p.x) + " " + format_double(p.y) + "\n";
    return out;
}

std::string instance_to_json(const Instance& inst) {
    std::string out = "{";
    if (!inst.name.empty()) out += "\"name\": " + quote(inst.name) + ", ";
    if (inst.seed) out += "\"seed\": " + std::to_string(*inst.seed) + ", ";
    out += "\"points\": [";
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        if (i) out += ", ";
        out += "[" + format_double(inst.points[i].x) + ", " + format_double(inst.points[i].y) + "]";
    }
    return out + "]}";
}

std::string result_to_json(const ResultRecord& rec) {
    const TwoDiskSolution& s = rec.solution;
    std::string out = "{\"radius\": " + format_double(s.radius) + ", \"disks\": [" + disk_json(s.disk1) + ", " +
                      disk_json(s.disk2) + "], \"assignment\": [";
    for (std::size_t i = 0; i < s.assignment.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s.assignment[i]);
    }
    const Branch& b = s.branch;
    out += "], \"branch\": {\"kind\": " + quote(b.kind) + ", \"rotation\": " + std::to_string(b.rotation) +
           ", \"pair\": " + std::to_string(b.pair) + ", \"variant\": " + std::to_string(b.variant) +
           ", \"axis\": " + std::to_string(b.axis);
    if (b.o) out += ", \"o\": [" + format_double(b.o->x) + ", " + format_double(b.o->y) + "]";
    out += "}";
    if (rec.seconds) out += ", \"timing\": {\"seconds\": " + format_double(*rec.seconds) + "}";
    return out + "}";
}

ResultRecord load_result(std::string_view text, const std::vector<Point>& points, double eps) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    ResultRecord rec;
    TwoDiskSolution& s = rec.solution;
    try {
        s.radius = finite(doc.at("radius"));
        const auto& disks = doc.at("disks");
        if (!disks.is_array() || disks.size() != 2) throw ParseError("expected two disks");
        s.disk1 = disk_from(disks[0]);
        s.disk2 = disk_from(disks[1]);
        for (const auto& a : doc.at("assignment")) s.assignment.push_back(a.get<int>());
        if (doc.contains("branch")) {
            const auto& b = doc["branch"];
            s.branch.kind = b.value("kind", "");
            s.branch.rotation = b.value("rotation", -1);
            s.branch.pair = b.value("pair", -1);
            s.branch.variant = b.value("variant", -1);
            s.branch.axis = b.value("axis", -1);
            if (b.contains("o")) s.branch.o = Point{finite(b["o"][0]), finite(b["o"][1])};
        }
        if (doc.contains("timing")) rec.seconds = finite(doc["timing"].at("seconds"));
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }

    if (s.assignment.size() != points.size()) throw VerificationError("assignment length differs from point count");
    const double cap = s.radius * (1.0 + eps);
    if (!(s.disk1.radius <= cap) || !(s.disk2.radius <= cap)) {
        throw VerificationError("disk radius exceeds the record radius");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        const int label = s.assignment[i];
        if (label != 1 && label != 2) throw VerificationError("assignment label must be 1 or 2");
        const Disk& d = label == 1 ? s.disk1 : s.disk2;
        const double dx = points[i].x - d.center.x;
        const double dy = points[i].y - d.center.y;
        const double lim = d.radius * (1.0 + eps);
        if (dx * dx + dy * dy > lim * lim) {
            throw VerificationError("point " + std::to_string(i) + " lies outside its disk");
        }
    }
    return rec;
}

std::string hull_to_json(const std::optional<CircularHull>& hull, double r) {
    std::string out = "{\"radius\": " + format_double(r) + ", \"exists\": " + (hull ? "true" : "false");
    if (hull) {
        out += ", \"vertices\": [";
        const auto v = hull->vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += "[" + format_double(v[i].x) + ", " + format_double(v[i].y) + "]";
        }
        out += "]";
    }
    return out + "}";
}

std::string coverage_to_json(const Coverage& cov) {
    std::string out = "{\"radius\": " + format_double(cov.radius) + ", \"arcs\": [";
    for (std::size_t i = 0; i < cov.arcs.size(); ++i) {
        const Arc& a = cov.arcs[i];
        if (i) out += ", ";
        out += "{\"cx\": " + format_double(a.center.x) + ", \"cy\": " + format_double(a.center.y) +
               ", \"r\": " + format_double(a.radius) + ", \"start\": " + format_double(a.start_angle) +
               ", \"end\": " + format_double(a.end_angle) + "}";
    }
    return out + "]}";
}

std::vector<Point> generate(InstanceKind kind, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (kind) {
            case InstanceKind::Uniform:
                out.push_back({u(rng), u(rng)});
                break;
            case InstanceKind::TwoCluster: {
                const double rad = std::sqrt(u(rng));
                const double th = 2.0 * std::numbers::pi * u(rng);
                out.push_back({rad * std::cos(th) + (i % 2 ? 4.0 : 0.0), rad * std::sin(th)});
                break;
            }
            case InstanceKind::Circle: {
                const double th = 2.0 * std::numbers::pi * u(rng);
                out.push_back({std::cos(th), std::sin(th)});
                break;
            }
        }
    }
    return out;
}

InstanceKind parse_kind(std::string_view name) {
    if (name == "uniform") return InstanceKind::Uniform;
    if (name == "two-cluster") return InstanceKind::TwoCluster;
    if (name == "circle") return InstanceKind::Circle;
    throw ParseError("unknown kind '" + std::string(name) + "'");
}

}  // namespace twocenter
