#include "liecoh/catalog.hpp"

#include "liecoh/exterior.hpp"

namespace liecoh {

namespace {

Rational take(Parameters& params, const std::string& key, std::optional<Rational> fallback,
              const std::string& example) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (!fallback) throw InvalidArgument(example + " requires parameter " + key);
    return *fallback;
  }
  Rational value = it->second;
  params.erase(it);
  return value;
}

void reject_leftovers(const Parameters& params, const std::string& example) {
  if (!params.empty()) {
    throw InvalidArgument(example + " does not take parameter " + params.begin()->first);
  }
}

Vector unit(std::size_t n, std::size_t i, const Rational& scale = 1) {
  Vector v(n);
  v[i] = scale;
  return v;
}

OneForm form(std::initializer_list<long> coeffs) {
  OneForm f(coeffs.size());
  std::size_t i = 0;
  for (long c : coeffs) f.coeffs[i++] = c;
  return f;
}

CatalogEntry abelian(Parameters params) {
  const Rational n_q = take(params, "n", std::nullopt, "abelian");
  reject_leftovers(params, "abelian");
  if (n_q.get_den() != 1 || n_q < 1 || n_q > 20) {
    throw InvalidArgument("abelian: n must be an integer between 1 and 20");
  }
  const std::size_t n = n_q.get_num().get_ui();
  CatalogEntry e{"abelian", {{"n", n_q}}, LieAlgebra::create(StructureConstants(n)),
                 "torus T^n: all brackets vanish; cohomology spanned by dx^{i1}^...^dx^{iq}", {}};
  std::vector<std::size_t> binomials;
  for (std::size_t p = 0; p <= n; ++p) binomials.push_back(binomial(n, p));
  e.expected.push_back({OneForm(n), binomials});
  return e;
}

CatalogEntry heisenberg3(Parameters params) {
  reject_leftovers(params, "heisenberg3");
  StructureConstants c(3);
  c.set_bracket(0, 1, unit(3, 2));
  CatalogEntry e{"heisenberg3", {}, LieAlgebra::create(std::move(c)),
                 "Heisenberg nilmanifold H3/Gamma3: [e1,e2] = e3 with e^3 = dz - x dy", {}};
  e.expected.push_back({form({0, 0, 0}), {1, 2, 2, 1}});
  e.expected.push_back({form({1, 0, 0}), {0, 0, 0, 0}});
  e.expected.push_back({form({0, -1, 0}), {0, 0, 0, 0}});
  return e;
}

CatalogEntry sol3(Parameters params) {
  const Rational k = take(params, "k", Rational(1), "sol3");
  reject_leftovers(params, "sol3");
  if (k == 0) throw InvalidArgument("sol3: k must be nonzero");
  StructureConstants c(3);
  c.set_bracket(0, 1, unit(3, 1, k));
  c.set_bracket(0, 2, unit(3, 2, -k));
  CatalogEntry e{"sol3", {{"k", k}}, LieAlgebra::create(std::move(c)),
                 "completely solvable R x R^2 with z acting by diag(e^{kz}, e^{-kz}); the lattice "
                 "condition e^k + e^{-k} in N only matters at group level",
                 {}};
  e.expected.push_back({form({0, 0, 0}), {1, 1, 1, 1}});
  e.expected.push_back({k * form({1, 0, 0}), {0, 1, 1, 0}});
  e.expected.push_back({k * form({-1, 0, 0}), {0, 1, 1, 0}});
  e.expected.push_back({k * form({2, 0, 0}), {0, 0, 0, 0}});
  return e;
}

CatalogEntry euclid3(Parameters params) {
  reject_leftovers(params, "euclid3");
  StructureConstants c(3);
  c.set_bracket(0, 1, unit(3, 2, -1));
  c.set_bracket(0, 2, unit(3, 1, 1));
  CatalogEntry e{"euclid3", {}, LieAlgebra::create(std::move(c)),
                 "rotation group R x R^2 with [e1,e2] = -2pi e3, [e1,e3] = 2pi e2, stored with "
                 "e1 rescaled by 1/(2pi); not completely solvable (ad e1 has eigenvalues 0, +-i)",
                 {}};
  e.expected.push_back({form({0, 0, 0}), {1, 1, 1, 1}});
  return e;
}

}  // namespace

std::vector<std::string> example_names() { return {"abelian", "euclid3", "heisenberg3", "sol3"}; }

CatalogEntry load_example(const std::string& name, const Parameters& params) {
  if (name == "abelian") return abelian(params);
  if (name == "heisenberg3") return heisenberg3(params);
  if (name == "sol3") return sol3(params);
  if (name == "euclid3") return euclid3(params);
  throw InvalidArgument("unknown example '" + name + "'");
}

}  // namespace liecoh
