#include "dtc/dt_vector.hpp"

#include <json.hpp>

namespace dtc {

std::vector<DtIssue> validate_dt(const CoordinateDatum& datum, const DTVector& v) {
  std::vector<DtIssue> issues;
  const int nc = datum.curve_count();
  if (static_cast<int>(v.n.size()) != nc || static_cast<int>(v.t.size()) != nc) {
    issues.push_back({Err::BadInput, -1,
                      "vector length mismatch: want " + std::to_string(nc) + " coordinates"});
    return issues;
  }
  for (int c = 0; c < nc; ++c) {
    if (v.n[c] < 0) {
      issues.push_back({Err::BadInput, c, "negative intersection number at curve " + std::to_string(c)});
    }
  }
  if (!issues.empty()) return issues;
  for (int p = 0; p < datum.pants_count(); ++p) {
    Int s = 0;
    for (int pos = 0; pos < 3; ++pos) s = checked_add(s, v.n[datum.pants[p][pos]]);
    if (s % 2 != 0) {
      issues.push_back({Err::ParityViolation, p,
                        "pants " + std::to_string(p) + " slot counts sum to odd value " +
                            std::to_string(s)});
    }
  }
  for (int c = 0; c < nc; ++c) {
    if (v.n[c] == 0 && v.t[c] < 0) {
      issues.push_back({Err::NegativeTwistAtZero, c,
                        "curve " + std::to_string(c) + " has n=0 but twist " +
                            std::to_string(v.t[c]) + " < 0"});
    }
  }
  return issues;
}

void require_valid_dt(const CoordinateDatum& datum, const DTVector& v) {
  auto issues = validate_dt(datum, v);
  if (issues.empty()) return;
  std::string msg = "invalid DT vector:";
  for (auto& i : issues) msg += " [" + std::string(err_name(i.code)) + "] " + i.detail + ";";
  throw std::invalid_argument(msg);
}

std::vector<DtIssue> validate_real(const CoordinateDatum& datum, const RealDTVector& v) {
  std::vector<DtIssue> issues;
  const int nc = datum.curve_count();
  if (static_cast<int>(v.n.size()) != nc || static_cast<int>(v.t.size()) != nc) {
    issues.push_back({Err::BadInput, -1, "vector length mismatch"});
    return issues;
  }
  for (int c = 0; c < nc; ++c) {
    if (v.n[c].sign() < 0) issues.push_back({Err::BadInput, c, "negative weight"});
    if (v.n[c].is_zero() && v.t[c].sign() < 0) {
      issues.push_back({Err::NegativeTwistAtZero, c, "curve " + std::to_string(c)});
    }
  }
  return issues;
}

std::vector<Int> modified_offsets(const CoordinateDatum& datum, const std::vector<Int>& n) {
  const int nc = datum.curve_count();
  DTC_CHECK(static_cast<int>(n.size()) == nc, "n-block length mismatch");
  std::vector<Int> off(nc, 0);
  for (CurveId c = 0; c < nc; ++c) {
    auto lm = local_model(datum, c);
    if (lm.folded) {
      off[c] = std::max<Int>(halve_exact(checked_sub(n[lm.one.a1.curve], 2 * n[c])), 0);
      continue;
    }
    Int n1 = n[lm.two.nbr[0].curve];
    Int n2 = n[lm.two.nbr[1].curve];
    Int n3 = n[lm.two.nbr[2].curve];
    Int n4 = n[lm.two.nbr[3].curve];
    Int a = std::max<Int>(halve_exact(checked_sub(n1, checked_add(n[c], n4))), 0);
    Int b = std::max<Int>(halve_exact(checked_sub(n3, checked_add(n[c], n2))), 0);
    off[c] = checked_add(a, b);
  }
  return off;
}

ModifiedDTVector to_modified(const CoordinateDatum& datum, const DTVector& v) {
  auto off = modified_offsets(datum, v.n);
  ModifiedDTVector m;
  m.n = v.n;
  m.tprime.resize(v.t.size());
  for (size_t i = 0; i < v.t.size(); ++i) m.tprime[i] = checked_add(v.t[i], off[i]);
  return m;
}

DTVector from_modified(const CoordinateDatum& datum, const ModifiedDTVector& m) {
  auto off = modified_offsets(datum, m.n);
  DTVector v;
  v.n = m.n;
  v.t.resize(m.tprime.size());
  for (size_t i = 0; i < m.tprime.size(); ++i) v.t[i] = checked_sub(m.tprime[i], off[i]);
  return v;
}

DTVector apply_cone_convention(const CoordinateDatum& datum, const DTVector& v,
                               const std::vector<TwistSign>& signs) {
  DTC_CHECK(signs.size() == v.n.size(), "sign vector length mismatch");
  DTVector out = v;
  for (size_t i = 0; i < v.n.size(); ++i) {
    if (out.n[i] != 0) continue;
    Int mag = out.t[i] < 0 ? -out.t[i] : out.t[i];
    out.t[i] = (signs[i] == TwistSign::DoublePrimeGE) ? -mag : mag;
  }
  return out;
}

std::string dt_to_json(const DTVector& v) {
  nlohmann::json j;
  j["schema"] = "dtc.vector.v1";
  j["n"] = v.n;
  j["t"] = v.t;
  return j.dump();
}

Outcome<DTVector> dt_from_json(const std::string& text, int expect_dim) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return make_err(Err::BadInput, "vector file is not valid JSON");
  if (j.contains("schema") && j["schema"] != "dtc.vector.v1") {
    return make_err(Err::BadInput, "unknown vector schema (want dtc.vector.v1)");
  }
  if (!j.contains("n") || !j.contains("t") || !j["n"].is_array() || !j["t"].is_array()) {
    return make_err(Err::BadInput, "vector needs arrays 'n' and 't'");
  }
  DTVector v;
  for (const auto& x : j["n"]) v.n.push_back(x.get<Int>());
  for (const auto& x : j["t"]) v.t.push_back(x.get<Int>());
  if (expect_dim >= 0 && (static_cast<int>(v.n.size()) != expect_dim ||
                          static_cast<int>(v.t.size()) != expect_dim)) {
    return make_err(Err::BadInput, "vector has wrong dimension for this datum");
  }
  return v;
}

}  // namespace dtc
