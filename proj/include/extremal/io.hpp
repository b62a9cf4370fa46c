#pragma once

// CSV and JSON renderings of the library's report types. Column orders and
// key orders are fixed; floating values carry 12 significant digits.

#include "extremal/classifier.hpp"
#include "extremal/density.hpp"
#include "extremal/lp.hpp"
#include "extremal/oracle.hpp"
#include "extremal/weightings.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace extremal {

using Json = nlohmann::ordered_json;

/// A double rounded to 12 significant digits, so dumps stay stable.
inline Json json_real(double x) {
  if (!std::isfinite(x)) {
    return nullptr;
  }
  return std::stod(format_real(x));
}

inline std::string vertex_label(int u) {
  return std::to_string(u + 1);
}

inline std::string edge_label(const Edge& e) {
  return vertex_label(e.u) + "-" + vertex_label(e.w);
}

inline Json to_json(const WeightingSpectrum& spec) {
  Json j;
  j["v"] = spec.vertex_count();
  j["alpha"] = spec.alpha();
  j["alpha_star"] = to_string(spec.alpha_star());
  Json entries = Json::array();
  for (const auto& [c, mult] : spec.entries()) {
    entries.push_back({{"r", c.r}, {"y", c.y}, {"b", c.b}, {"mult", mult}});
  }
  j["entries"] = std::move(entries);
  j["ctilde"] = spec.ctilde();
  return j;
}

/// Inverse of to_json(WeightingSpectrum).
inline WeightingSpectrum spectrum_from_json(const Json& j) {
  try {
    WeightingSpectrum::Entries entries;
    for (const auto& e : j.at("entries")) {
      entries[ColourCounts{e.at("r").get<int>(), e.at("y").get<int>(), e.at("b").get<int>()}] =
          e.at("mult").get<std::uint64_t>();
    }
    return WeightingSpectrum(j.at("v").get<int>(), std::move(entries));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed spectrum JSON: ") + ex.what());
  }
}

inline Json to_json(const DualityReport& r, const Graph& g) {
  Json j;
  j["epsilon"] = to_string(r.epsilon);
  j["primal"] = to_string(r.primal);
  j["dual"] = to_string(r.dual);
  j["formula"] = to_string(r.formula);
  Json x = Json::object();
  for (std::size_t u = 0; u < r.witness_x.size(); ++u) {
    x[vertex_label(static_cast<int>(u))] = to_string(r.witness_x[u]);
  }
  j["witness_x"] = std::move(x);
  Json y = Json::object();
  for (std::size_t k = 0; k < r.witness_y.size(); ++k) {
    y[edge_label(g.edges()[k])] = to_string(r.witness_y[k]);
  }
  Json z = Json::object();
  for (std::size_t u = 0; u < r.witness_z.size(); ++u) {
    z[vertex_label(static_cast<int>(u))] = to_string(r.witness_z[u]);
  }
  j["witness_yz"] = {{"y", std::move(y)}, {"z", std::move(z)}};
  j["complementary_slackness"] = r.complementary_slackness;
  return j;
}

inline Json to_json(const TypeClassification& c) {
  Json j;
  j["graph"] = c.graph_id;
  j["pattern"] = to_string(c.pattern);
  j["winner_runs"] = c.winner_runs;
  j["gamma"] = c.gamma ? json_real(*c.gamma) : Json(nullptr);
  j["delta"] = c.delta ? json_real(*c.delta) : Json(nullptr);
  Json bounds = Json::array();
  for (const auto& b : c.boundaries) {
    bounds.push_back({{"from", std::string(1, winner_symbol(b.from))},
                      {"to", std::string(1, winner_symbol(b.to))},
                      {"lo", json_real(b.lo)},
                      {"hi", json_real(b.hi)}});
  }
  j["boundaries"] = std::move(bounds);
  j["q_grid"] = c.q_grid;
  Json samples = Json::array();
  for (std::size_t i = 0; i < c.betas.size(); ++i) {
    samples.push_back({{"beta", json_real(c.betas[i])},
                       {"q_star", json_real(c.q_stars[i])},
                       {"winner", std::string(1, winner_symbol(c.winners[i]))}});
  }
  j["samples"] = std::move(samples);
  return j;
}

inline std::string density_curve_csv(const DensityCurve& curve) {
  std::ostringstream os;
  os << "beta,f_T,q_star,t_S,t_K,winner\n";
  for (const auto& s : curve.samples) {
    os << format_real(s.point.beta) << ',' << format_real(s.point.f_T) << ','
       << format_real(s.point.q_star) << ',' << format_real(s.point.t_S) << ','
       << format_real(s.point.t_K) << ',' << winner_symbol(s.winner) << '\n';
  }
  return os.str();
}

inline std::string count_report_csv(const std::vector<CountReport>& rows) {
  std::ostringstream os;
  os << "n,beta,q,hom,injective,copies,normalised,t_reference,gap\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_real(r.beta) << ',' << format_real(r.q) << ',' << r.hom << ','
       << r.injective << ',' << r.copies << ',' << format_real(r.normalised) << ','
       << format_real(r.t_reference) << ',' << format_real(r.gap) << '\n';
  }
  return os.str();
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "graph6,v,e,alpha,alpha_star,A,pattern,gamma,delta\n";
  for (const auto& r : rows) {
    const auto& c = r.classification;
    os << r.graph6 << ',' << r.v << ',' << r.e << ',' << r.alpha << ',' << to_string(r.alpha_star)
       << ',' << r.max_independent_sets << ',' << to_string(c.pattern) << ','
       << (c.gamma ? format_real(*c.gamma) : "") << ',' << (c.delta ? format_real(*c.delta) : "")
       << '\n';
  }
  return os.str();
}

}  // namespace extremal
