#include <cstdio>
#include <fstream>

#include "json.hpp"

#include "qsim1d/errors.hpp"
#include "qsim1d/scenario.hpp"

namespace qsim1d {

namespace {

using ordered_json = nlohmann::ordered_json;

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

std::string_view route_name(DiagonalRoute r) {
  switch (r) {
    case DiagonalRoute::Auto: return "auto";
    case DiagonalRoute::Direct: return "direct";
    case DiagonalRoute::GenericCircuit: return "generic";
    case DiagonalRoute::Quadratic: return "quadratic";
  }
  return "?";
}

ordered_json gaussian_json(const Gaussian& g) {
  return ordered_json{{"x0", g.x0}, {"p0", g.p0}, {"sigma", g.sigma}};
}

ordered_json potential_json(const Potential& potential) {
  ordered_json j;
  j["kind"] = potential.kind();
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Linear>) {
          j["force"] = v.force;
        } else if constexpr (std::is_same_v<V, SquareBarrier> || std::is_same_v<V, HardWalls>) {
          j["height"] = v.height;
          j["left"] = v.left;
          j["right"] = v.right;
        } else if constexpr (std::is_same_v<V, Harmonic>) {
          j["mass"] = v.mass;
          j["omega"] = v.omega;
        } else if constexpr (std::is_same_v<V, PiecewiseCubic>) {
          j["mass"] = v.harmonic.mass;
          j["omega"] = v.harmonic.omega;
          j["a_cubic"] = v.a_cubic;
        }
      },
      potential.shape);
  j["twist"] = potential.twist;
  return j;
}

ordered_json packet_json(const WavepacketSpec& spec) {
  return std::visit(
      [](const auto& p) -> ordered_json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Gaussian>) {
          auto j = ordered_json{{"kind", "gaussian"}};
          j.update(gaussian_json(p));
          return j;
        } else if constexpr (std::is_same_v<P, Squeezed>) {
          return ordered_json{{"kind", "squeezed"},  {"x0", p.x0},       {"p0", p.p0},
                              {"width_factor", p.width_factor}, {"mass", p.mass},
                              {"omega", p.omega}};
        } else {
          return ordered_json{{"kind", "two_packet"},
                              {"first", gaussian_json(p.first)},
                              {"second", gaussian_json(p.second)},
                              {"relative_phase", p.relative_phase}};
        }
      },
      spec);
}

ordered_json config_json(const ScenarioConfig& c) {
  ordered_json outputs = ordered_json::array();
  for (Quantity q : c.outputs) outputs.push_back(quantity_name(q));
  return ordered_json{
      {"name", c.name},
      {"description", c.description},
      {"reconstructed", c.reconstructed},
      {"n_qubits", c.n_qubits},
      {"half_width", c.half_width},
      {"hbar", c.hbar},
      {"mass", c.mass},
      {"potential", potential_json(c.potential)},
      {"packet", packet_json(c.packet)},
      {"epsilon", c.epsilon},
      {"frames", c.frames},
      {"substeps", c.substeps},
      {"total_steps", c.total_steps()},
      {"route", {{"potential", route_name(c.potential_route)},
                 {"kinetic", route_name(c.kinetic_route)}}},
      {"outputs", outputs},
      {"shots", c.shots},
      {"seed", c.seed},
      {"norm_tolerance", c.norm_tolerance},
      {"source", c.source},
  };
}

ordered_json field_json(const Field& field) {
  ordered_json rows = ordered_json::array();
  for (std::size_t f = 0; f < field.frames(); ++f) {
    const auto row = field.row(f);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return rows;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string to_csv(const ScenarioResult& result, Quantity quantity) {
  const auto it = result.fields.find(quantity);
  if (it == result.fields.end()) {
    throw ConfigError("outputs", "quantity '" + std::string(quantity_name(quantity)) +
                                     "' was not computed");
  }
  const Field& field = it->second;
  std::string out = "t,x,value\n";
  out.reserve(out.size() + field.frames() * field.points() * 64);
  for (std::size_t f = 0; f < field.frames(); ++f) {
    for (std::size_t k = 0; k < field.points(); ++k) {
      append_double(out, result.times[f]);
      out += ',';
      append_double(out, result.x[k]);
      out += ',';
      append_double(out, field(f, k));
      out += '\n';
    }
  }
  return out;
}

std::string to_json(const ScenarioResult& result) {
  ordered_json fields = ordered_json::object();
  for (Quantity q : result.config.outputs) {
    fields[std::string(quantity_name(q))] = field_json(result.fields.at(q));
  }
  const ordered_json doc{
      {"name", result.config.name},
      {"config", config_json(result.config)},
      {"t", result.times},
      {"x", result.x},
      {"fields", fields},
  };
  return doc.dump(1) + "\n";
}

std::string metadata_json(const ScenarioResult& result, const EmitOptions& options) {
  const auto& m = result.metadata;
  ordered_json doc{
      {"name", result.config.name},
      {"code_version", m.code_version},
      {"config", config_json(result.config)},
      {"total_steps", m.total_steps},
      {"gates_per_step", m.gates_per_step},
      {"max_norm_drift", m.max_norm_drift},
      {"norm_ok", result.norm_ok()},
      {"tail_mass", m.tail_mass},
      {"norm_factor", m.norm_factor},
  };
  if (!m.sampler_rng.empty()) doc["sampler_rng"] = m.sampler_rng;
  if (m.oracle_max_deviation) doc["oracle_max_deviation"] = *m.oracle_max_deviation;
  if (options.record_timing) doc["wall_time_s"] = m.wall_time_s;
  doc["warnings"] = m.warnings;
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit(const ScenarioResult& result, OutputFormat format,
                                        const std::filesystem::path& dir,
                                        const EmitOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
  std::vector<std::filesystem::path> written;
  const std::string& name = result.config.name;
  if (format == OutputFormat::Csv) {
    for (Quantity q : result.config.outputs) {
      auto path = dir / (name + "_" + std::string(quantity_name(q)) + ".csv");
      write_file(path, to_csv(result, q));
      written.push_back(std::move(path));
    }
  } else {
    auto path = dir / (name + ".json");
    write_file(path, to_json(result));
    written.push_back(std::move(path));
  }
  auto meta = dir / (name + ".meta.json");
  write_file(meta, metadata_json(result, options));
  written.push_back(std::move(meta));
  return written;
}

ParsedOutput parse_json_output(std::string_view text) {
  ParsedOutput out;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    out.name = doc.at("name").get<std::string>();
    out.times = doc.at("t").get<std::vector<double>>();
    out.x = doc.at("x").get<std::vector<double>>();
    for (const auto& [key, rows] : doc.at("fields").items()) {
      const auto q = parse_quantity(key);
      if (!q) throw ConfigError("fields." + key, "unknown quantity");
      Field field(rows.size(), out.x.size());
      for (std::size_t f = 0; f < rows.size(); ++f) {
        const auto row = rows[f].get<std::vector<double>>();
        if (row.size() != out.x.size()) throw ConfigError("fields." + key, "ragged matrix");
        std::copy(row.begin(), row.end(), field.row(f).begin());
      }
      out.fields.emplace(*q, std::move(field));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("", std::string("malformed output document: ") + e.what());
  }
  return out;
}

}  // namespace qsim1d
