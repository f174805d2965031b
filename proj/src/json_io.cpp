#include <nsl/json_io.hpp>

#include <stdexcept>

namespace nsl {

namespace {

Json matrix_to_json(const Mat<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat<Rational> matrix_from_json(const Json& j, std::size_t g, const char* what) {
  if (!j.is_array() || j.size() != g)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(g) + " rows");
  Mat<Rational> m(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != g)
      throw std::invalid_argument(std::string(what) + ": row " + std::to_string(i) +
                                  " must hold " + std::to_string(g) + " entries");
    for (std::size_t k = 0; k < g; ++k) m.at(i, k) = rational_from_json(row[k]);
  }
  return m;
}

std::vector<long long> int_vector_from_json(const Json& j, std::size_t want, const char* what) {
  if (!j.is_array() || j.size() != want)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                " integers");
  std::vector<long long> v;
  for (const Json& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument(std::string(what) + ": entries must be integers");
    v.push_back(x.get<long long>());
  }
  return v;
}

}  // namespace

std::uint64_t fnv64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv64_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv64(s);
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[static_cast<std::size_t>(k)] = digits[h & 0xf];
  return out;
}

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational::parse(std::to_string(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("rational value must be a string \"p/q\" or an integer");
}

Json quadext_to_json(const QuadExt& x) {
  Json j;
  j["a"] = x.a().str();
  j["b"] = x.b().str();
  j["m"] = x.m().str();
  return j;
}

Json nsclass_to_json(const NSClass& e) {
  Json j;
  j["g"] = e.g;
  j["a"] = e.a;
  j["b"] = e.b;
  j["c"] = e.c;
  return j;
}

NSClass nsclass_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j["g"].is_number_integer())
    throw std::invalid_argument("class: expected an object with integer \"g\"");
  long long gg = j["g"].get<long long>();
  if (gg < 1) throw std::invalid_argument("class: g must be positive");
  std::size_t g = static_cast<std::size_t>(gg);
  std::size_t u = NSClass::upper_size(g);
  return NSClass(g, int_vector_from_json(j.at("a"), u, "class a"),
                 int_vector_from_json(j.at("b"), g * g, "class b"),
                 int_vector_from_json(j.at("c"), u, "class c"));
}

Json triple_to_json(const std::array<NSClass, 3>& t) {
  Json j = Json::array();
  for (const NSClass& e : t) j.push_back(nsclass_to_json(e));
  return j;
}

std::array<NSClass, 3> triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("triple: expected an array of three classes");
  return {nsclass_from_json(j[0]), nsclass_from_json(j[1]), nsclass_from_json(j[2])};
}

Json period_to_json(const PeriodMatrix& tau) {
  Json j;
  j["g"] = tau.g;
  j["m"] = tau.m.str();
  j["P"] = matrix_to_json(tau.P);
  j["Q"] = matrix_to_json(tau.Q);
  return j;
}

PeriodMatrix period_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j["g"].is_number_integer())
    throw std::invalid_argument("period matrix: expected an object with integer \"g\"");
  long long gg = j["g"].get<long long>();
  if (gg < 1) throw std::invalid_argument("period matrix: g must be positive");
  std::size_t g = static_cast<std::size_t>(gg);
  return PeriodMatrix(g, rational_from_json(j.at("m")), matrix_from_json(j.at("P"), g, "P"),
                      matrix_from_json(j.at("Q"), g, "Q"));
}

const char* torus_kind_name(TorusKind k) {
  switch (k) {
    case TorusKind::ValidTorus: return "ValidTorus";
    case TorusKind::RealDegenerate: return "RealDegenerate";
  }
  return "?";
}

const char* polarization_status_name(PolarizationStatus s) {
  switch (s) {
    case PolarizationStatus::Found: return "Found";
    case PolarizationStatus::MaximalRankShortcut: return "MaximalRankShortcut";
    case PolarizationStatus::NoneWithinBound: return "NoneWithinBound";
  }
  return "?";
}

const char* approx_status_name(ApproxStatus s) {
  switch (s) {
    case ApproxStatus::Ok: return "Ok";
    case ApproxStatus::NonlinearLocus: return "NonlinearLocus";
    case ApproxStatus::InfeasibleBase: return "InfeasibleBase";
  }
  return "?";
}

Json ns_rank_to_json(const NSRankResult& r) {
  Json j;
  j["rank"] = r.rank;
  Json basis = Json::array();
  for (const NSClass& e : r.basis) basis.push_back(nsclass_to_json(e));
  j["basis"] = std::move(basis);
  return j;
}

Json polarization_to_json(const PolarizationResult& r) {
  Json j;
  j["status"] = polarization_status_name(r.status);
  j["rank"] = r.ns.rank;
  if (r.witness) {
    Json w;
    w["class"] = nsclass_to_json(r.witness->cls);
    w["combo"] = r.witness->combo;
    Json h;
    h["S"] = matrix_to_json(r.witness->form.S);
    h["T"] = matrix_to_json(r.witness->form.T);
    h["positive_definite"] = r.witness->form.positive_definite;
    w["H"] = std::move(h);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json fiber_point_to_json(const FiberPoint& p) {
  Json j;
  j["tau"] = period_to_json(p.tau);
  j["kind"] = torus_kind_name(p.kind);
  j["discriminant"] = p.discriminant.str();
  j["rank"] = p.ns.rank;
  j["polarization"] = p.polarization ? polarization_to_json(*p.polarization) : Json(nullptr);
  j["polarization_note"] = p.polarization_note;
  return j;
}

Json fiber_report_to_json(const FiberReport& r, const Ring& ring) {
  Json j;
  j["cone_dimension"] = r.cone_dimension;
  j["projective_dimension"] = r.projective_dimension;
  j["empty"] = r.empty;
  Json gens = Json::array();
  for (const Poly& f : r.generators) gens.push_back(ring.str(f));
  j["generators"] = std::move(gens);
  j["chart"] = r.chart ? Json(*r.chart) : Json(nullptr);
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  j["discriminant"] = r.discriminant ? Json(r.discriminant->str()) : Json(nullptr);
  j["irreducible_over_q"] = r.irreducible_over_q ? Json(*r.irreducible_over_q) : Json(nullptr);
  Json pts = Json::array();
  for (const FiberPoint& p : r.points) pts.push_back(fiber_point_to_json(p));
  j["points"] = std::move(pts);
  j["note"] = r.note;
  return j;
}

Json approx_result_to_json(const ApproxResult& r) {
  Json j;
  j["status"] = approx_status_name(r.status);
  j["message"] = r.message;
  Json pts = Json::array();
  for (const ApproxPoint& p : r.points) {
    Json pj;
    pj["tau"] = period_to_json(p.tau);
    pj["rank"] = p.ns.rank;
    pj["polarization"] = polarization_to_json(p.polarization);
    pts.push_back(std::move(pj));
  }
  j["points"] = std::move(pts);
  return j;
}

}  // namespace nsl
