#include "wbsearch/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "wbsearch/errors.hpp"

namespace wbsearch {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto pos = s.find(sep, start);
        const auto end = pos == std::string_view::npos ? s.size() : pos;
        const auto token = trim(s.substr(start, end - start));
        if (!token.empty()) parts.push_back(token);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

class Parser {
public:
    Parser(std::string origin, int line) : origin_(std::move(origin)), line_(line) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError(origin_ + ":" + std::to_string(line_) + ": " + what);
    }

    double number(std::string_view v) const {
        double out = 0.0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
            fail("expected a number, got '" + std::string(v) + "'");
        }
        return out;
    }

    std::uint64_t unsigned_int(std::string_view v) const {
        std::uint64_t out = 0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || ptr != v.data() + v.size()) {
            fail("expected a non-negative integer, got '" + std::string(v) + "'");
        }
        return out;
    }

    int integer(std::string_view v) const {
        const auto u = unsigned_int(v);
        if (u > 1'000'000'000ULL) fail("integer out of range: " + std::string(v));
        return static_cast<int>(u);
    }

    bool boolean(std::string_view v) const {
        if (v == "true" || v == "yes" || v == "1") return true;
        if (v == "false" || v == "no" || v == "0") return false;
        fail("expected true/false, got '" + std::string(v) + "'");
    }

    PlannerKind planner(std::string_view v) const {
        if (auto p = parse_planner(v)) return *p;
        fail("unknown planner '" + std::string(v) + "'");
    }

    Corner corner(std::string_view v) const {
        if (v == "sw") return Corner::SouthWest;
        if (v == "se") return Corner::SouthEast;
        if (v == "nw") return Corner::NorthWest;
        if (v == "ne") return Corner::NorthEast;
        fail("corner must be one of sw, se, nw, ne");
    }

    SurvivorMotion motion(std::string_view v) const {
        if (v == "linear") return SurvivorMotion::LinearFixedHeading;
        if (v == "random_heading") return SurvivorMotion::RandomHeadingPersistence;
        fail("survivor.motion must be linear or random_heading");
    }

    StartMode start_mode(std::string_view v) const {
        if (v == "fixed") return StartMode::Fixed;
        if (v == "uniform") return StartMode::Uniform;
        if (v == "near_observer") return StartMode::NearObserver;
        fail("survivor.start must be fixed, uniform or near_observer");
    }

private:
    std::string origin_;
    int line_;
};

using Setter = std::function<void(ConfigFile&, const Parser&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"env.width", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.width = p.number(v); }},
        {"env.height", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.height = p.number(v); }},
        {"env.cell_size", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.cell_size = p.number(v); }},
        {"planner", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.planner = p.planner(v); }},
        {"uav.max_speed", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.uav.max_speed = p.number(v); }},
        {"uav.altitude", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.uav.altitude = p.number(v); }},
        {"uav.fov_half_angle", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.uav.fov_half_angle = p.number(v); }},
        {"uav.flight_time", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.uav.flight_time = p.number(v); }},
        {"uav.start_corner", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.uav.start_corner = p.corner(v); }},
        {"uav.arrival_tolerance", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.uav.arrival_tolerance = p.number(v); }},
        {"survivor.x", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.survivor.start.x = p.number(v); }},
        {"survivor.y", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.survivor.start.y = p.number(v); }},
        {"survivor.heading", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.survivor.heading = p.number(v); }},
        {"survivor.speed", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.survivor.speed = p.number(v); }},
        {"survivor.motion", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.survivor.motion = p.motion(v); }},
        {"survivor.change_period", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.survivor.change_period = p.number(v); }},
        {"survivor.start", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.survivor.start_mode = p.start_mode(v); }},
        {"survivor.random_heading", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.survivor.random_heading = p.boolean(v); }},
        {"observer", [](ConfigFile& c, const Parser& p, std::string_view v) {
             const auto w = words(v);
             if (w.size() != 3) p.fail("observer takes 'x y radius'");
             c.scenario.observers.push_back({{p.number(w[0]), p.number(w[1])}, p.number(w[2])});
         }},
        {"observers.count", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.random_observers = p.integer(v); }},
        {"observers.radius", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.random_observer_radius = p.number(v); }},
        {"sim.dt", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.dt = p.number(v); }},
        {"sim.seed", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.seed = p.unsigned_int(v); }},
        {"sim.return_to_start", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.return_to_start = p.boolean(v); }},
        {"sim.record_trajectory", [](ConfigFile& c, const Parser& p, std::string_view v) { c.scenario.record_trajectory = p.boolean(v); }},
        {"mc.runs", [](ConfigFile& c, const Parser& p, std::string_view v) { c.batch.runs = p.integer(v); }},
        {"mc.master_seed", [](ConfigFile& c, const Parser& p, std::string_view v) { c.batch.master_seed = p.unsigned_int(v); }},
        {"mc.parallelism", [](ConfigFile& c, const Parser& p, std::string_view v) { c.batch.parallelism = p.integer(v); }},
        {"mc.planners", [](ConfigFile& c, const Parser& p, std::string_view v) {
             c.batch.planners.clear();
             for (auto name : split(v, ',')) c.batch.planners.push_back(p.planner(name));
             if (c.batch.planners.empty()) p.fail("mc.planners is empty");
         }},
        {"report.x", [](ConfigFile& c, const Parser& p, std::string_view v) {
             if (!c.report) c.report.emplace();
             c.report->position.x = p.number(v);
         }},
        {"report.y", [](ConfigFile& c, const Parser& p, std::string_view v) {
             if (!c.report) c.report.emplace();
             c.report->position.y = p.number(v);
         }},
        {"report.heading", [](ConfigFile& c, const Parser& p, std::string_view v) {
             if (!c.report) c.report.emplace();
             c.report->heading = p.number(v);
         }},
    };
    return table;
}

}  // namespace

ConfigFile parse_config(std::string_view text, const std::string& origin) {
    ConfigFile cfg;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const Parser parser(origin, line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) parser.fail("expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (value.empty()) parser.fail("missing value for '" + std::string(key) + "'");

        const auto& table = setters();
        const auto it = table.find(key);
        if (it == table.end()) parser.fail("unknown key '" + std::string(key) + "'");
        it->second(cfg, parser, value);
    }
    cfg.batch.base = cfg.scenario;
    return cfg;
}

ConfigFile load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError(path, "cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

}  // namespace wbsearch
