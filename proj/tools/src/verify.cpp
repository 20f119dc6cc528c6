// Copyright 2026 The matroidkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroidkit/cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "matroidkit/axioms.hpp"
#include "matroidkit/graphic.hpp"
#include "matroidkit/linalg.hpp"
#include "matroidkit/space.hpp"
#include "matroidkit/structure.hpp"

namespace matroidkit::cli {

namespace {

using Failure = std::optional<std::string>;

template <typename F>
void check(Report& out, const char* name, const std::string& id, F&& body) {
  try {
    const Failure failure = body();
    out.add(name, id, !failure.has_value(), failure.value_or(""));
  } catch (const std::exception& e) {
    out.add(name, id, false, std::string("error: ") + e.what());
  }
}

// Calls f(C, D) for every pair of disjoint subsets of g.
template <typename F>
void for_each_split(ElementSet g, F&& f) {
  for_each_subset(g, [&](ElementSet c) { for_each_subset(g - c, [&](ElementSet d) { f(c, d); }); });
}

bool contains_sorted(const std::vector<ElementSet>& sorted, ElementSet s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

Failure disagreement(const std::optional<ElementSet>& at, const std::string& what) {
  if (!at) return std::nullopt;
  return what + " differ at " + at->to_braced_string();
}

std::string cdx(ElementSet c, ElementSet d) { return "C=" + c.to_braced_string() + " D=" + d.to_braced_string(); }

Failure tameness_failure(const Matroid& m) {
  const auto t = tameness(m);
  if (!t.all_finite) return "infinite circuit-cocircuit intersection";
  if (t.max_intersection > m.ground().size()) {
    return "max intersection " + std::to_string(t.max_intersection) + " exceeds ground size";
  }
  return std::nullopt;
}

void verify_operators(const std::string& id, const Matroid& m, Report& out) {
  if (m.universe_size() > kMaxOperatorGround) return;
  const auto s = SpaceOperator::closure_of(m);
  const auto s_dual = s.dual();
  check(out, "dagger", id, [&]() -> Failure {
    const auto v = find_dagger_violation(s, s_dual);
    if (!v) return std::nullopt;
    return "X=" + v->x_side.to_braced_string() + " x=" + std::to_string(v->element) + " Y=" + v->y_side.to_braced_string();
  });
  check(out, "operator-involution", id, [&]() -> Failure {
    if (same_operator(s_dual.dual(), s)) return std::nullopt;
    return "S** differs from S";
  });
  check(out, "span-dual", id, [&]() -> Failure {
    if (same_operator(SpaceOperator::closure_of(m.dual()), s_dual)) return std::nullopt;
    return "Sp of the dual differs from the dual of Sp";
  });
  check(out, "span-ie", id, [&]() -> Failure {
    if (!is_idempotent(s)) return "Sp is not idempotent";
    if (!is_exchange(s)) return "Sp is not exchange";
    return std::nullopt;
  });
  check(out, "dual-ie", id, [&]() -> Failure {
    if (!is_ie(s_dual)) return "dual of Sp is not an IE-operator";
    return std::nullopt;
  });
}

}  // namespace

void verify_matroid(const std::string& id, const Matroid& m, Report& out, const SuiteLimits& limits) {
  const auto g = m.ground();
  const auto n = g.size();

  std::optional<AxiomReport> axioms;
  std::string axiom_error;
  try {
    axioms = check_axioms(GroundSet(m.universe_size()), m.independent_sets());
  } catch (const std::exception& e) {
    axiom_error = std::string("error: ") + e.what();
  }
  const auto axiom_line = [&](const char* name, const AxiomCheck AxiomReport::*field) {
    if (!axioms) {
      out.add(name, id, false, axiom_error);
    } else {
      const auto& c = (*axioms).*field;
      out.add(name, id, c.pass, c.pass ? "" : c.witness());
    }
  };
  axiom_line("axiom-i1", &AxiomReport::i1);
  axiom_line("axiom-i2", &AxiomReport::i2);
  axiom_line("axiom-i3", &AxiomReport::i3);
  axiom_line("axiom-im", &AxiomReport::im);

  check(out, "bases-equicardinal", id, [&]() -> Failure {
    if (m.bases().empty()) return "no bases";
    return std::nullopt;
  });

  if (g == ElementSet::full(m.universe_size())) {
    check(out, "backend-coherence", id, [&]() -> Failure {
      const auto family = m.independent_sets();
      const auto explicit_form = Matroid::from_family(GroundSet(m.universe_size()), family);
      return disagreement(first_disagreement(explicit_form, m), "explicit and backend oracles");
    });
  }

  check(out, "dual-involution", id, [&]() -> Failure {
    return disagreement(first_disagreement(m.dual().dual(), m), "M** and M");
  });

  check(out, "dual-bases", id, [&]() -> Failure {
    auto complements = m.bases();
    for (auto& b : complements) b = g - b;
    std::sort(complements.begin(), complements.end());
    if (complements == m.dual().bases()) return std::nullopt;
    return "bases of the dual are not the complements of the bases";
  });

  const auto& circuit_list = m.circuits();
  const auto& cocircuit_list = m.cocircuits();

  check(out, "circuit-cocircuit-not-one", id, [&]() -> Failure {
    for (auto o : circuit_list) {
      for (auto b : cocircuit_list) {
        if ((o & b).size() == 1) return "o=" + o.to_braced_string() + " b=" + b.to_braced_string();
      }
    }
    return std::nullopt;
  });

  if (n <= limits.fundamental) {
    check(out, "fundamental-pair", id, [&]() -> Failure {
      for (auto base : m.bases()) {
        std::vector<ElementSet> fc(m.universe_size());
        std::vector<ElementSet> fcc(m.universe_size());
        for_each_element(g - base, [&](std::size_t e) { fc[e] = fundamental_circuit(m, base, e); });
        for_each_element(base, [&](std::size_t f) { fcc[f] = fundamental_cocircuit(m, base, f); });
        Failure failure;
        for_each_element(g - base, [&](std::size_t e) {
          for_each_element(base, [&](std::size_t f) {
            if (failure) return;
            const auto meet = fc[e] & fcc[f];
            const ElementSet pair{e, f};
            if (!meet.empty() && meet != pair) {
              failure = "B=" + base.to_braced_string() + " o_" + std::to_string(e) + "&b_" + std::to_string(f) + "=" +
                        meet.to_braced_string();
            } else if (fc[e].contains(f) != fcc[f].contains(e)) {
              failure = "B=" + base.to_braced_string() + " membership asymmetry for e=" + std::to_string(e) +
                        " f=" + std::to_string(f);
            }
          });
        });
        if (failure) return failure;
      }
      return std::nullopt;
    });
  }

  if (n <= limits.circuit_pair) {
    check(out, "cocircuit-through-pair", id, [&]() -> Failure {
      for (auto o : circuit_list) {
        for (auto e : o.elements()) {
          for (auto f : o.elements()) {
            if (e == f) continue;
            const auto b = cocircuit_through_pair(m, o, e, f);
            if (!contains_sorted(cocircuit_list, b) || (o & b) != ElementSet{e, f}) {
              return "o=" + o.to_braced_string() + " e=" + std::to_string(e) + " f=" + std::to_string(f) +
                     " b=" + b.to_braced_string();
            }
          }
        }
      }
      return std::nullopt;
    });
  }

  if (n <= limits.lift) {
    check(out, "minor-circuit-lift", id, [&]() -> Failure {
      Failure failure;
      for_each_split(g, [&](ElementSet c, ElementSet d) {
        if (failure) return;
        const auto minor = m.contract(c).delete_elements(d);
        for (auto lifted_from : minor.circuits()) {
          const auto o = lift_circuit(m, c, d, lifted_from);
          if (!contains_sorted(circuit_list, o) || !lifted_from.is_subset_of(o) || !o.is_subset_of(lifted_from | c)) {
            failure = cdx(c, d) + " o'=" + lifted_from.to_braced_string() + " o=" + o.to_braced_string();
            return;
          }
        }
      });
      return failure;
    });
  }

  if (n <= limits.dichotomy) {
    check(out, "circuit-cocircuit-dichotomy", id, [&]() -> Failure {
      Failure failure;
      for_each_element(g, [&](std::size_t x) {
        const auto rest = g.without(x);
        for_each_subset(rest, [&](ElementSet c) {
          if (failure) return;
          const auto d = rest - c;
          const auto p = position(m, c, x, d);
          const bool is_circuit_side = p.side == Position::Side::kCircuit;
          const auto& list = is_circuit_side ? circuit_list : cocircuit_list;
          const auto allowed = (is_circuit_side ? c : d).with(x);
          if (!contains_sorted(list, p.witness) || !p.witness.contains(x) || !p.witness.is_subset_of(allowed)) {
            failure = cdx(c, d) + " x=" + std::to_string(x) + " bad witness " + p.witness.to_braced_string();
          }
        });
      });
      return failure;
    });
    check(out, "minor-dual-identity", id, [&]() -> Failure {
      Failure failure;
      const auto dual = m.dual();
      for_each_split(g, [&](ElementSet c, ElementSet d) {
        if (failure) return;
        // (M / D \ C)* against M* / C \ D.
        const auto lhs = m.contract(d).delete_elements(c).dual();
        const auto rhs = dual.contract(c).delete_elements(d);
        if (const auto at = first_disagreement(lhs, rhs)) failure = cdx(c, d) + " differ at " + at->to_braced_string();
      });
      return failure;
    });
  }

  verify_operators(id, m, out);

  check(out, "tame", id, [&] { return tameness_failure(m); });
  check(out, "tame-dual", id, [&] { return tameness_failure(m.dual()); });
  check(out, "tame-minors", id, [&]() -> Failure {
    Failure failure;
    for_each_split(g, [&](ElementSet c, ElementSet d) {
      if (failure) return;
      if (auto f = tameness_failure(m.contract(c).delete_elements(d))) failure = cdx(c, d) + " " + *f;
    });
    return failure;
  });
}

void verify_vector_family(const std::string& id, const VectorFamily& f, Report& out, const SuiteLimits& limits) {
  const auto& a = f.matrix();

  check(out, "linalg-kernel", id, [&]() -> Failure {
    for (const auto& v : kernel_basis(a)) {
      for (const auto& entry : a.apply(v)) {
        if (!entry.is_zero()) return "kernel vector not annihilated";
      }
    }
    return std::nullopt;
  });
  check(out, "linalg-rank-nullity", id, [&]() -> Failure {
    const auto r = rank(a);
    const auto k = kernel_basis(a).size();
    if (r + k == a.cols()) return std::nullopt;
    return "rank " + std::to_string(r) + " + nullity " + std::to_string(k) + " != " + std::to_string(a.cols());
  });
  check(out, "linalg-rref-idempotent", id, [&]() -> Failure {
    const auto once = rref(a);
    const auto twice = rref(once.reduced);
    if (twice.reduced == once.reduced && twice.pivot_columns == once.pivot_columns) return std::nullopt;
    return "rref is not idempotent";
  });
  check(out, "linalg-solve", id, [&]() -> Failure {
    std::vector<Scalar> x;
    for (std::size_t j = 0; j < a.cols(); ++j) x.push_back(f.field().from_integer(static_cast<std::int64_t>(j) + 1));
    const auto b = a.apply(x);
    const auto solution = solve(a, b);
    if (!solution) return "consistent system reported unsolvable";
    if (a.apply(*solution) != b) return "solution does not satisfy the system";
    return std::nullopt;
  });

  check(out, "thin-family", id, [&]() -> Failure {
    if (is_thin_family(f).thin) return std::nullopt;
    return "family is not thin";
  });
  check(out, "thin-support", id, [&]() -> Failure {
    Failure failure;
    for_each_subset(ElementSet::full(f.ground_size()), [&](ElementSet x) {
      if (failure) return;
      const auto c = find_thin_dependence(f, x);
      if (!c) return;
      const auto s = support(*c);
      if (s.empty() || !s.is_subset_of(x) || !is_thin_family(f.restrict_to(s)).thin) {
        failure = "dependence on " + x.to_braced_string() + " has support " + s.to_braced_string();
      }
    });
    return failure;
  });
  check(out, "ts-collapse", id, [&]() -> Failure {
    return disagreement(first_disagreement(thin_sums_system(f), vector_matroid(f)), "thin sums and vector matroid");
  });

  std::optional<TsDualityReport> duality;
  std::string duality_error;
  try {
    duality = verify_ts_duality(f);
  } catch (const std::exception& e) {
    duality_error = std::string("error: ") + e.what();
  }
  if (!duality) {
    out.add("ts-duality-forward", id, false, duality_error);
    out.add("ts-duality-backward", id, false, duality_error);
  } else {
    const auto at = [](const std::optional<ElementSet>& s) { return s ? "differs at " + s->to_braced_string() : ""; };
    out.add("ts-duality-forward", id, duality->forward, at(duality->forward_mismatch));
    out.add("ts-duality-backward", id, duality->backward, at(duality->backward_mismatch));
  }

  check(out, "dualrep-oracle", id, [&]() -> Failure {
    return disagreement(first_disagreement(vector_matroid(dual_representation(f)), vector_matroid(f).dual()),
                        "M(psi) and M(phi)*");
  });
  check(out, "kernel-circuits", id, [&]() -> Failure {
    if (circuits_from_kernel(f) == vector_matroid(f).circuits()) return std::nullopt;
    return "kernel-support circuits differ from enumerated circuits";
  });

  verify_matroid(id, vector_matroid(f), out, limits);
}

void verify_graph(const std::string& id, const MultiGraph& g, Report& out, const SuiteLimits& limits) {
  const std::pair<const char*, Field> fields[] = {
      {"graphic-rep-gf2", Field::prime(2)},
      {"graphic-rep-gf3", Field::prime(3)},
      {"graphic-rep-gf5", Field::prime(5)},
      {"graphic-rep-q", Field::rationals()},
  };
  for (const auto& [name, field] : fields) {
    check(out, name, id, [&]() -> Failure {
      const auto r = verify_graphic_representable(g, field);
      if (r.pass) return std::nullopt;
      return "differs at " + r.mismatch->to_braced_string();
    });
  }
  const auto cycle = cycle_matroid(g);
  const auto bond = bond_matroid(g);
  if (g.edge_count() <= limits.bond_cuts) {
    check(out, "bond-cuts", id, [&]() -> Failure {
      if (bond.circuits() == minimal_edge_cuts(g)) return std::nullopt;
      return "bond circuits differ from minimal edge cuts";
    });
  }
  check(out, "bond-dual", id, [&]() -> Failure {
    return disagreement(first_disagreement(bond.dual(), cycle), "dual of bond matroid and cycle matroid");
  });

  verify_matroid(id, cycle, out, limits);
}

void verify_uniform(const std::string& id, const UniformInstance& u, Report& out, const SuiteLimits& limits) {
  std::optional<Matroid> m;
  try {
    m = Matroid::uniform(u.rank, u.size);
  } catch (const std::exception& e) {
    out.add("uniform-build", id, false, std::string("error: ") + e.what());
    return;
  }
  check(out, "uniform-vandermonde", id, [&]() -> Failure {
    const auto q = Field::rationals();
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < u.rank; ++i) {
      for (std::size_t j = 0; j < u.size; ++j) {
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), j + 1, i);
        entries.push_back(Scalar::rational(mpq_class(power)));
      }
    }
    const auto linear = vector_matroid(VectorFamily(Matrix(q, u.rank, u.size, std::move(entries))));
    return disagreement(first_disagreement(linear, *m), "explicit and Vandermonde oracles");
  });
  verify_matroid(id, *m, out, limits);
}

void verify_axiom_negatives(Report& out) {
  const auto only = [](const AxiomReport& r, const AxiomCheck AxiomReport::*failing) {
    const AxiomCheck AxiomReport::*all[] = {&AxiomReport::i1, &AxiomReport::i2, &AxiomReport::i3, &AxiomReport::im};
    for (auto a : all) {
      if ((r.*a).pass == (a == failing)) return false;
    }
    return true;
  };

  check(out, "axiom-negative-i1", "neg-no-empty", [&]() -> Failure {
    const std::vector<ElementSet> family;
    const auto r = check_axioms(GroundSet(2), family);
    if (!only(r, &AxiomReport::i1)) return "expected only I1 to fail";
    if (r.i1.first != ElementSet{}) return "I1 witness is not the empty set";
    return std::nullopt;
  });

  check(out, "axiom-negative-i2", "neg-not-down-closed", [&]() -> Failure {
    const std::vector<ElementSet> family{ElementSet{}, ElementSet{0}, ElementSet{0, 1}};
    const auto r = check_axioms(GroundSet(2), family);
    if (!only(r, &AxiomReport::i2)) return "expected only I2 to fail";
    const auto in = [&](ElementSet s) { return std::find(family.begin(), family.end(), s) != family.end(); };
    if (!in(*r.i2.first) || in(*r.i2.second) || !r.i2.second->is_subset_of(*r.i2.first)) {
      return "I2 witness does not re-check: " + r.i2.witness();
    }
    return std::nullopt;
  });

  check(out, "axiom-negative-i3", "neg-no-exchange", [&]() -> Failure {
    const std::vector<ElementSet> family{ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{2}, ElementSet{0, 1}};
    const auto r = check_axioms(GroundSet(3), family);
    if (!only(r, &AxiomReport::i3)) return "expected only I3 to fail";
    if (r.i3.first != ElementSet{0} || r.i3.second != ElementSet{2}) return "unexpected I3 witness " + r.i3.witness();
    const auto in = [&](ElementSet s) { return std::find(family.begin(), family.end(), s) != family.end(); };
    bool augmentable = false;
    for_each_element(*r.i3.second - *r.i3.first, [&](std::size_t x) { augmentable = augmentable || in(r.i3.first->with(x)); });
    if (augmentable) return "I3 witness does not re-check";
    return std::nullopt;
  });
}

void verify_non_matroidal_ie(Report& out) {
  check(out, "non-matroidal-ie", "ground-3", [&]() -> Failure {
    const auto result = search_non_matroidal_ie(3);
    if (!result.non_matroidal.empty()) return std::nullopt;
    return "none found: all " + std::to_string(result.ie_operators) + " IE-operators among " +
           std::to_string(result.spaces_examined) + " spaces equal Sp_M for one of the " +
           std::to_string(result.matroids) + " matroids";
  });
}

Report verify_instance(const Instance& instance, const SuiteLimits& limits) {
  Report out;
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, UniformInstance>) {
          verify_uniform(instance.id, payload, out, limits);
        } else if constexpr (std::is_same_v<T, VectorFamily>) {
          verify_vector_family(instance.id, payload, out, limits);
        } else {
          verify_graph(instance.id, payload, out, limits);
        }
      },
      instance.payload);
  return out;
}

Report verify_all(const CorpusSpec& spec, unsigned threads, const SuiteLimits& limits) {
  const auto corpus = generate_corpus(spec);
  Report out;
  verify_axiom_negatives(out);
  if (spec.max_ground >= 3) verify_non_matroidal_ie(out);

  std::vector<Report> per_instance(corpus.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (auto i = next++; i < corpus.size(); i = next++) per_instance[i] = verify_instance(corpus[i], limits);
  };
  const auto count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(corpus.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  for (const auto& r : per_instance) out.append(r);
  return out;
}

}  // namespace matroidkit::cli
