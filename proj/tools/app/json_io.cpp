#include "app/json_io.hpp"

namespace trivex::app {

using nlohmann::json;

json to_json(const spectral::SpectrumReport& r) {
  json j = {{"graph", r.graph},         {"n", r.n},           {"d", r.d},
            {"bipartite", r.bipartite}, {"lambda1", r.lambda1}, {"lambda_min", r.lambda_min},
            {"sigma", r.sigma},         {"sigma_rayleigh", r.sigma_rayleigh},
            {"ramanujan", r.ramanujan}, {"method", r.method}, {"residual", r.residual}};
  if (r.spectrum) j["spectrum"] = *r.spectrum;
  return j;
}

spectral::SpectrumReport spectrum_from_json(const json& j) {
  spectral::SpectrumReport r;
  r.graph = j.at("graph").get<std::string>();
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.bipartite = j.at("bipartite").get<bool>();
  r.lambda1 = j.at("lambda1").get<double>();
  r.lambda_min = j.at("lambda_min").get<double>();
  r.sigma = j.at("sigma").get<double>();
  r.sigma_rayleigh = j.at("sigma_rayleigh").get<double>();
  r.ramanujan = j.at("ramanujan").get<bool>();
  r.method = j.at("method").get<std::string>();
  r.residual = j.at("residual").get<double>();
  if (j.contains("spectrum")) r.spectrum = j.at("spectrum").get<std::vector<double>>();
  return r;
}

namespace {

json rational(const Rational& q) { return {{"exact", q.str()}, {"value", q.to_double()}}; }

}  // namespace

json to_json(const surface::SurfaceReport& r) {
  json j = {{"k", r.k},
            {"N", r.N},
            {"n", r.n},
            {"vertices", r.vertices},
            {"edges", r.edges},
            {"faces", r.faces},
            {"face_length", r.face_length},
            {"genus", r.genus},
            {"genus_hurwitz", rational(r.genus_hurwitz)},
            {"mu", rational(r.mu)},
            {"non_flatness", rational(r.ratio)},
            {"isometry_group_lower_bound", r.isometry_lower},
            {"hat_genus", r.hat_genus},
            {"cusps", r.cusps},
            {"convention", r.convention},
            {"right_same_type", r.right_same_type},
            {"cusp_length_ok", r.cusp_length_ok},
            {"matches_closed_forms", r.matches_closed_forms()},
            {"predicted",
             {{"vertices", r.predicted.vertices},
              {"edges", r.predicted.edges},
              {"faces", r.predicted.faces},
              {"face_length", r.predicted.face_length},
              {"genus", r.predicted.genus}}}};
  if (r.hyperbolic) {
    const auto& h = *r.hyperbolic;
    j["hyperbolic"] = {{"m", h.m},
                       {"interior_angle", h.interior_angle},
                       {"polygon_side", h.polygon_side},
                       {"polygon_area", h.polygon_area},
                       {"polygon_circumradius", h.polygon_circumradius},
                       {"polygon_inradius", h.polygon_inradius},
                       {"triangle_angle", h.triangle_angle},
                       {"triangle_side", h.triangle_side},
                       {"triangle_area", h.triangle_area}};
  }
  if (r.areas) {
    j["areas"] = {{"by_polygons", r.areas->by_polygons},
                  {"by_triangles", r.areas->by_triangles},
                  {"by_genus", r.areas->by_genus},
                  {"agree", r.areas->agree()}};
  }
  return j;
}

json to_json(const platonic::DualityVerdict& v) {
  json j = {{"k", v.k},
            {"N_k", v.N_k},
            {"n_k", v.n_k},
            {"modulus", v.modulus},
            {"dual_vertices", v.dual_vertices},
            {"platonic_vertices", v.platonic_vertices},
            {"counts_equal", v.counts_equal},
            {"direct", v.direct},
            {"isomorphic", v.isomorphic},
            {"certificate", v.certificate}};
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

}  // namespace trivex::app
