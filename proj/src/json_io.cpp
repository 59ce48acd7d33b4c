#include "surfpts/json_io.hpp"

#include "surfpts/error.hpp"
#include "surfpts/numeric.hpp"

namespace surfpts {

Json integer_json(const Integer& n) {
  if (n.fits_int64()) return n.to_int64();
  return n.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    if (auto n = Integer::parse(j.get<std::string>())) return *n;
  }
  fail(Errc::parse_error, "expected an integer, got " + j.dump());
}

Json coefficients_json(const IntPolynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.descending()) out.push_back(integer_json(c));
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::parse_error, "expected a coefficient array");
  std::vector<Integer> desc;
  for (const auto& c : j) desc.push_back(integer_from_json(c));
  return IntPolynomial::from_descending(desc);
}

Json hodge_json(const HodgeVector& hv) { return {{"ell", integer_json(hv.ell)}, {"exponents", hv.exponents}}; }

Json group_json(const FiniteAbelianGroup& G) {
  const std::size_t slots = std::max<std::size_t>(4, G.rank());
  Json inv = Json::array();
  for (const auto& d : G.invariants(slots)) inv.push_back(integer_json(d));
  Json primary = Json::object();
  for (const auto& pp : factorize(G.order())) {
    primary[pp.prime.str()] = primary_part(G, pp.prime, slots).exponents;
  }
  return {{"invariants", inv}, {"text", format_group(G)}, {"primary", primary}};
}

FiniteAbelianGroup group_from_json(const Json& j) {
  const Json& inv = j.is_object() ? j.at("invariants") : j;
  if (!inv.is_array()) fail(Errc::parse_error, "expected an invariant list");
  std::vector<Integer> orders;
  for (const auto& d : inv) orders.push_back(integer_from_json(d));
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::parse_error, "expected a row array");
  const auto n = static_cast<Eigen::Index>(j.size());
  const auto c = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  IntMatrix m(n, c);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) fail(Errc::parse_error, "ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(r, k) = integer_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json polygon_json(const Polygon& p) {
  Json out = Json::array();
  for (const auto& v : p.corners()) out.push_back({v.x, v.y});
  return out;
}

Json shape_json(const IsogenyShape& shape) {
  Json out{{"case", case_number(shape)}};
  if (const auto* s = std::get_if<Case1>(&shape)) {
    out["f"] = coefficients_json(s->f);
  } else if (const auto* s = std::get_if<Case2>(&shape)) {
    out["P"] = coefficients_json(s->P);
  } else if (const auto* s = std::get_if<Case3>(&shape)) {
    out["P"] = coefficients_json(s->P);
    out["sigma"] = s->sigma;
    out["s"] = integer_json(s->s);
  } else {
    const auto& s4 = std::get<Case4>(shape);
    out["sigma"] = s4.sigma;
    out["s"] = integer_json(s4.s);
  }
  return out;
}

Json weil_json(const WeilPolynomial& f) {
  Json fac = Json::array();
  for (const auto& pp : factorize(f.value_at_one())) fac.push_back({integer_json(pp.prime), pp.exponent});
  return {{"q", integer_json(f.q)},
          {"p", integer_json(f.p)},
          {"n", f.n},
          {"coefficients", coefficients_json(f.poly())},
          {"f1", integer_json(f.value_at_one())},
          {"f1_factorization", fac}};
}

Json classification_json(const WeilPolynomial& f, const ClassificationResult& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(group_json(g));
  Json primes = Json::object();
  for (const auto& [ell, detail] : r.per_prime) {
    Json vecs = Json::array();
    for (std::size_t i = 0; i < detail.admissible.size(); ++i) {
      Json entry{{"exponents", detail.admissible[i].exponents}};
      if (i < detail.splittings.size()) {
        Json splits = Json::array();
        for (const auto& s : detail.splittings[i]) splits.push_back({s.first, s.second});
        entry["splittings"] = splits;
      }
      vecs.push_back(std::move(entry));
    }
    primes[ell.str()] = vecs;
  }
  return {{"polynomial", weil_json(f)}, {"shape", shape_json(r.shape)}, {"groups", groups}, {"per_prime", primes}};
}

Json decision_json(const Decision& d) {
  Json out{{"accepted", d.accepted}, {"reason", d.reason}};
  out["prime"] = d.prime ? integer_json(*d.prime) : Json(nullptr);
  out["exponents"] = d.vector ? Json(d.vector->exponents) : Json(nullptr);
  return out;
}

Json oracle_json(const OracleReport& r) {
  Json realized = Json::array();
  for (const auto& [exps, lattice] : r.realized) {
    realized.push_back({{"exponents", exps}, {"lattice", matrix_json(lattice.basis)}});
  }
  return {{"ell", integer_json(r.ell)},
          {"depth", r.depth},
          {"lattice_count", integer_json(r.lattice_count)},
          {"realized", realized}};
}

}  // namespace surfpts
