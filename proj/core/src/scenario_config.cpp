#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qsim1d/errors.hpp"
#include "qsim1d/scenario.hpp"

namespace qsim1d {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& builtin_scenario_table();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  std::size_t line;
};

// Keys are consumed as they are interpreted; whatever is left is unknown.
class KeyValues {
 public:
  KeyValues(std::string_view text, std::string source) : source_(std::move(source)) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("", where(line_no) + "expected 'key = value', got '" + std::string(line) +
                                  "'");
      }
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (key.empty()) throw ConfigError("", where(line_no) + "empty key");
      if (!entries_.emplace(key, Entry{value, line_no}).second) {
        throw ConfigError(key, where(line_no) + "duplicate key");
      }
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::optional<std::string> take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    current_line_ = it->second.line;
    std::string v = std::move(it->second.value);
    entries_.erase(it);
    return v;
  }

  std::string require(const std::string& key) {
    auto v = take(key);
    if (!v) throw ConfigError(key, source_ + ": missing required key");
    return *v;
  }

  double number(const std::string& key, double fallback) {
    auto v = take(key);
    return v ? parse_double(key, *v) : fallback;
  }

  double required_number(const std::string& key) { return parse_double(key, require(key)); }

  template <class Int>
  Int integer(const std::string& key, Int fallback) {
    auto v = take(key);
    if (!v) return fallback;
    Int out{};
    const auto* first = v->data();
    const auto* last = v->data() + v->size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
      throw ConfigError(key, where(current_line_) + "expected a non-negative integer, got '" + *v + "'");
    }
    return out;
  }

  bool boolean(const std::string& key, bool fallback) {
    auto v = take(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "yes" || *v == "1") return true;
    if (*v == "false" || *v == "no" || *v == "0") return false;
    throw ConfigError(key, where(current_line_) + "expected true or false, got '" + *v + "'");
  }

  void expect_empty() const {
    if (entries_.empty()) return;
    const auto& [key, entry] = *std::min_element(
        entries_.begin(), entries_.end(),
        [](const auto& a, const auto& b) { return a.second.line < b.second.line; });
    throw ConfigError(key, where(entry.line) + "unknown or inapplicable key");
  }

  std::string where(std::size_t line) const {
    return source_ + ":" + std::to_string(line) + ": ";
  }
  std::size_t current_line() const { return current_line_; }

 private:
  double parse_double(const std::string& key, const std::string& text) const {
    double out = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || !std::isfinite(out)) {
      throw ConfigError(key, where(current_line_) + "expected a number, got '" + text + "'");
    }
    return out;
  }

  std::string source_;
  std::map<std::string, Entry> entries_;
  std::size_t current_line_ = 0;
};

DiagonalRoute parse_route(KeyValues& kv, const std::string& key) {
  const auto v = kv.take(key);
  if (!v || *v == "auto") return DiagonalRoute::Auto;
  if (*v == "direct") return DiagonalRoute::Direct;
  if (*v == "generic") return DiagonalRoute::GenericCircuit;
  if (*v == "quadratic") return DiagonalRoute::Quadratic;
  throw ConfigError(key, kv.where(kv.current_line()) +
                             "expected auto, direct, generic or quadratic, got '" + *v + "'");
}

Potential parse_potential(KeyValues& kv, const ScenarioConfig& config) {
  Potential potential;
  const std::string kind = kv.take("potential").value_or("free");
  const auto line = kv.current_line();
  potential.twist = kv.number("potential.twist", 0.0);
  if (kind == "free") {
    potential.shape = FreeParticle{};
  } else if (kind == "linear") {
    potential.shape = Linear{kv.required_number("potential.force")};
  } else if (kind == "square_barrier") {
    potential.shape = SquareBarrier{kv.required_number("potential.height"),
                                    kv.required_number("potential.left"),
                                    kv.required_number("potential.right")};
  } else if (kind == "harmonic") {
    potential.shape = Harmonic{kv.number("potential.mass", config.mass),
                               kv.required_number("potential.omega")};
  } else if (kind == "piecewise_cubic") {
    potential.shape =
        PiecewiseCubic{Harmonic{kv.number("potential.mass", config.mass),
                                kv.required_number("potential.omega")},
                       kv.required_number("potential.a_cubic")};
  } else if (kind == "hard_walls") {
    HardWalls walls;
    const auto height = kv.take("potential.height");
    if (!height || *height == "auto") {
      walls.height = max_wall_height(config.epsilon, config.hbar);
    } else {
      KeyValues single("potential.height = " + *height, "potential.height");
      walls.height = single.required_number("potential.height");
    }
    walls.left = kv.required_number("potential.left");
    walls.right = kv.required_number("potential.right");
    potential.shape = walls;
  } else {
    throw ConfigError("potential", kv.where(line) + "unknown potential '" + kind + "'");
  }
  return potential;
}

Gaussian parse_gaussian(KeyValues& kv, const std::string& prefix) {
  return Gaussian{kv.number(prefix + ".x0", 0.0), kv.number(prefix + ".p0", 0.0),
                  kv.number(prefix + ".sigma", 1.0)};
}

WavepacketSpec parse_packet(KeyValues& kv, const ScenarioConfig& config) {
  const std::string kind = kv.take("packet").value_or("gaussian");
  const auto line = kv.current_line();
  if (kind == "gaussian") return parse_gaussian(kv, "packet");
  if (kind == "squeezed") {
    double mass = config.mass;
    double omega = 1.0;
    if (const auto* h = std::get_if<Harmonic>(&config.potential.shape)) {
      mass = h->mass;
      omega = h->omega;
    } else if (const auto* c = std::get_if<PiecewiseCubic>(&config.potential.shape)) {
      mass = c->harmonic.mass;
      omega = c->harmonic.omega;
    }
    Squeezed s;
    s.x0 = kv.number("packet.x0", 0.0);
    s.p0 = kv.number("packet.p0", 0.0);
    s.width_factor = kv.number("packet.width_factor", 1.0);
    s.mass = kv.number("packet.mass", mass);
    s.omega = kv.number("packet.omega", omega);
    return s;
  }
  if (kind == "two_packet") {
    TwoPacket t;
    t.first = parse_gaussian(kv, "packet.first");
    t.second = parse_gaussian(kv, "packet.second");
    t.relative_phase = kv.number("packet.relative_phase", 0.0);
    return t;
  }
  throw ConfigError("packet", kv.where(line) + "unknown packet '" + kind + "'");
}

std::vector<Quantity> parse_outputs(KeyValues& kv) {
  const auto v = kv.take("outputs");
  if (!v) return {Quantity::Abs2};
  std::vector<Quantity> out;
  std::string text = *v;
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream is(text);
  std::string word;
  while (is >> word) {
    const auto q = parse_quantity(word);
    if (!q) {
      throw ConfigError("outputs", kv.where(kv.current_line()) + "unknown quantity '" + word +
                                       "' (abs2, re2, im2, abs, samples)");
    }
    if (std::find(out.begin(), out.end(), *q) == out.end()) out.push_back(*q);
  }
  if (out.empty()) throw ConfigError("outputs", kv.where(kv.current_line()) + "no quantities listed");
  return out;
}

}  // namespace

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Abs2: return "abs2";
    case Quantity::Re2: return "re2";
    case Quantity::Im2: return "im2";
    case Quantity::Abs: return "abs";
    case Quantity::Samples: return "samples";
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::Abs2, Quantity::Re2, Quantity::Im2, Quantity::Abs,
                     Quantity::Samples}) {
    if (quantity_name(q) == name) return q;
  }
  return std::nullopt;
}

bool ScenarioConfig::wants(Quantity q) const {
  return std::find(outputs.begin(), outputs.end(), q) != outputs.end();
}

ScenarioConfig parse_scenario(std::string_view text, std::string_view source) {
  KeyValues kv(text, std::string(source));
  ScenarioConfig config;
  config.source = std::string(source);
  config.name = kv.require("name");
  config.description = kv.take("description").value_or("");
  config.reconstructed = kv.boolean("reconstructed", false);
  config.n_qubits = kv.integer<unsigned>("n_qubits", config.n_qubits);
  config.half_width = kv.number("half_width", config.half_width);
  config.hbar = kv.number("hbar", config.hbar);
  config.mass = kv.number("mass", config.mass);
  config.epsilon = kv.number("epsilon", config.epsilon);
  config.frames = kv.integer<std::size_t>("frames", config.frames);
  config.substeps = kv.integer<std::size_t>("substeps", config.substeps);
  config.shots = kv.integer<std::size_t>("shots", config.shots);
  config.seed = kv.integer<std::uint64_t>("seed", config.seed);
  config.norm_tolerance = kv.number("norm_tolerance", config.norm_tolerance);
  config.outputs = parse_outputs(kv);
  config.potential_route = parse_route(kv, "route.potential");
  config.kinetic_route = parse_route(kv, "route.kinetic");
  config.potential = parse_potential(kv, config);
  config.packet = parse_packet(kv, config);
  kv.expect_empty();
  validate(config);
  return config;
}

void validate(const ScenarioConfig& c) {
  auto fail = [](const char* field, const std::string& what) { throw ConfigError(field, what); };
  if (c.name.empty()) fail("name", "must not be empty");
  if (c.name.find_first_of("/\\ \t") != std::string::npos) {
    fail("name", "must not contain path separators or whitespace");
  }
  if (c.n_qubits < 1 || c.n_qubits > 20) fail("n_qubits", "must be in 1..20");
  if (!(c.half_width > 0.0)) fail("half_width", "must be positive");
  if (!(c.hbar > 0.0)) fail("hbar", "must be positive");
  if (!(c.mass > 0.0)) fail("mass", "must be positive");
  if (!(c.epsilon > 0.0)) fail("epsilon", "must be positive");
  if (c.frames < 1) fail("frames", "must be at least 1");
  if (c.substeps < 1) fail("substeps", "must be at least 1");
  if (c.wants(Quantity::Samples) && c.shots == 0) fail("shots", "samples output needs shots >= 1");
  if (!(c.norm_tolerance > 0.0)) fail("norm_tolerance", "must be positive");
  if (c.potential_route == DiagonalRoute::Quadratic && !c.potential.is_centered_harmonic()) {
    fail("route.potential", "quadratic route needs a harmonic potential");
  }
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Harmonic>) {
          if (!(v.mass > 0.0) || !(v.omega > 0.0)) fail("potential", "mass and omega must be positive");
        } else if constexpr (std::is_same_v<V, PiecewiseCubic>) {
          if (!(v.harmonic.mass > 0.0) || !(v.harmonic.omega > 0.0)) {
            fail("potential", "mass and omega must be positive");
          }
        } else if constexpr (std::is_same_v<V, SquareBarrier> || std::is_same_v<V, HardWalls>) {
          if (!(v.left < v.right)) fail("potential.left", "must be less than potential.right");
          if (!(v.height >= 0.0)) fail("potential.height", "must be non-negative");
        }
      },
      c.potential.shape);
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Gaussian>) {
          if (!(p.sigma > 0.0)) fail("packet.sigma", "must be positive");
        } else if constexpr (std::is_same_v<P, Squeezed>) {
          if (!(p.width_factor > 0.0)) fail("packet.width_factor", "must be positive");
          if (!(p.mass > 0.0) || !(p.omega > 0.0)) fail("packet", "mass and omega must be positive");
        } else {
          if (!(p.first.sigma > 0.0)) fail("packet.first.sigma", "must be positive");
          if (!(p.second.sigma > 0.0)) fail("packet.second.sigma", "must be positive");
        }
      },
      c.packet);
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path.string());
}

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::builtin_scenario_table()) names.emplace_back(name);
  return names;
}

std::string_view builtin_scenario_text(std::string_view name) {
  for (const auto& [n, text] : detail::builtin_scenario_table()) {
    if (n == name) return text;
  }
  throw ConfigError("", "no built-in scenario named '" + std::string(name) + "'");
}

ScenarioConfig builtin_scenario(std::string_view name) {
  auto config = parse_scenario(builtin_scenario_text(name), "builtin:" + std::string(name));
  config.source = "builtin";
  return config;
}

std::vector<ScenarioEntry> list_scenarios(const std::optional<std::filesystem::path>& user_dir) {
  std::vector<ScenarioEntry> entries;
  for (const auto& name : builtin_scenario_names()) {
    const auto config = builtin_scenario(name);
    entries.push_back({config.name, config.description, "builtin", std::nullopt});
  }
  if (!user_dir) return entries;

  std::error_code ec;
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(*user_dir, ec)) {
    if (item.is_regular_file() && item.path().extension() == kScenarioExtension) {
      files.push_back(item.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    ScenarioEntry entry{file.stem().string(), "", file.string(), std::nullopt};
    try {
      const auto config = load_scenario_file(file);
      entry.name = config.name;
      entry.description = config.description;
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

ScenarioConfig resolve_scenario(std::string_view name_or_path,
                                const std::optional<std::filesystem::path>& user_dir) {
  const std::filesystem::path as_path(name_or_path);
  if (name_or_path.find('/') != std::string_view::npos ||
      as_path.extension() == kScenarioExtension) {
    return load_scenario_file(as_path);
  }
  if (user_dir) {
    const auto candidate = *user_dir / (std::string(name_or_path) + std::string(kScenarioExtension));
    if (std::filesystem::exists(candidate)) return load_scenario_file(candidate);
  }
  return builtin_scenario(name_or_path);
}

}  // namespace qsim1d
