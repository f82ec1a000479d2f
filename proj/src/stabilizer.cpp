#include "cubic27/stabilizer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

namespace cubic27 {

namespace {

// Runs f(i) for i in [0, n) on up to `jobs` threads; results are written by index.
void parallel_for(int n, int jobs, const std::function<void(int)>& f) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        for (int i = j; i < n; i += jobs) f(i);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<PluckerLine<NfElem>> pick_lines(const LineTable<NfElem>& lines, const LSet& l) {
  return {lines[l[0]], lines[l[1]], lines[l[2]], lines[l[3]], lines[l[4]]};
}

// Points where the form does not vanish, for a cheap invariance test before the full pullback.
std::vector<Vec4<NfElem>> probe_points(const CubicForm<NfElem>& form) {
  FieldRef k = form[0].field();
  std::vector<Vec4<NfElem>> out;
  const int pts[][4] = {{1, 2, 3, 5}, {2, -1, 7, 3}, {3, 5, -2, 1}, {-4, 1, 1, 6}, {5, 3, 8, -7}, {1, -6, 2, 9}};
  for (const auto& p : pts) {
    Vec4<NfElem> v{NfElem(k, p[0]), NfElem(k, p[1]), NfElem(k, p[2]), NfElem(k, p[3])};
    if (!evaluate(form, v).is_zero()) out.push_back(std::move(v));
    if (out.size() == 2) break;
  }
  return out;
}

bool fixes_form(const CubicForm<NfElem>& form, const std::vector<Vec4<NfElem>>& probes, const Mat4<NfElem>& m) {
  if (probes.size() == 2) {
    NfElem a = evaluate(form, mat_vec(m, probes[0])) * evaluate(form, probes[1]);
    NfElem b = evaluate(form, mat_vec(m, probes[1])) * evaluate(form, probes[0]);
    if (a != b) return false;
  }
  return proportional_vec(compose(form, m), form);
}

bool is_identity(const Perm& p) { return p == identity_perm(); }

}  // namespace

std::vector<Perm> StabilizerGroup::perms() const {
  std::vector<Perm> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.perm);
  return out;
}

std::vector<Projectivity<NfElem>> candidate_matrices(const FamilyMember& member, int jobs) {
  AdmissibleGroup ag = admissible_subgroup(member.spec->eckardt_ids);
  const auto& lines = member.lines();
  const auto base = pick_lines(lines, basic_lset());
  std::vector<Projectivity<NfElem>> out(ag.lset_images.size());
  parallel_for(static_cast<int>(out.size()), jobs,
               [&](int i) { out[i] = find_projectivity(base, pick_lines(lines, ag.lset_images[i])); });
  return out;
}

Perm induced_permutation(const Projectivity<NfElem>& m, const LineTable<NfElem>& lines) {
  Perm p{};
  std::array<bool, kNumLines> used{};
  for (int k = 0; k < kNumLines; ++k) {
    PluckerLine<NfElem> img = map_line(m, lines[k]);
    int hit = -1;
    for (int j = 0; j < kNumLines && hit < 0; ++j) {
      if (!used[j] && lines[j] == img) hit = j;
    }
    if (hit < 0) throw Error(ErrorCode::PostCheckFailed, "image of " + line_name(k) + " is not a line of the surface");
    used[hit] = true;
    p[k] = static_cast<std::uint8_t>(hit);
  }
  return p;
}

StabilizerGroup compute_stabilizer(const FamilyMember& member, int jobs) {
  StabilizerGroup g{member, 0, {}};
  auto cands = candidate_matrices(member, jobs);
  g.candidate_count = static_cast<int>(cands.size());
  const auto& form = member.surface.form;
  const auto probes = probe_points(form);
  std::vector<std::optional<StabElement>> hits(cands.size());
  parallel_for(g.candidate_count, jobs, [&](int i) {
    if (fixes_form(form, probes, cands[i].m)) hits[i] = StabElement{cands[i], induced_permutation(cands[i], member.lines())};
  });
  for (auto& h : hits) {
    if (!h) continue;
    if (is_identity(h->perm)) {
      g.elements.insert(g.elements.begin(), std::move(*h));
    } else {
      g.elements.push_back(std::move(*h));
    }
  }
  if (g.elements.empty() || !is_identity(g.elements.front().perm)) {
    throw Error(ErrorCode::ClosureViolation, "identity missing");
  }
  // Permutations determine matrices, so closure of the permutations and agreement of the matrix
  // products with the recorded elements on generators times group give closure of the matrices.
  std::map<Perm, int> index;
  for (int i = 0; i < g.order(); ++i) {
    if (!index.emplace(g.elements[i].perm, i).second) throw Error(ErrorCode::ClosureViolation, "repeated permutation");
  }
  for (const auto& a : g.elements) {
    if (!index.count(inverse(a.perm))) throw Error(ErrorCode::ClosureViolation, "inverse missing");
    for (const auto& b : g.elements) {
      if (!index.count(compose(a.perm, b.perm))) throw Error(ErrorCode::ClosureViolation, "product missing");
    }
  }
  std::vector<Perm> gens;
  {
    std::set<Perm> span{identity_perm()};
    for (const auto& e : g.elements) {
      if (span.count(e.perm)) continue;
      gens.push_back(e.perm);
      auto grown = generate_group(gens);
      span = std::set<Perm>(grown.begin(), grown.end());
    }
  }
  for (const Perm& s : gens) {
    const auto& ms = g.elements[index.at(s)].matrix.m;
    for (const auto& b : g.elements) {
      const auto& want = g.elements[index.at(compose(s, b.perm))].matrix.m;
      if (!proportional_mat(mat_mul(ms, b.matrix.m), want)) {
        throw Error(ErrorCode::ClosureViolation, "matrix product disagrees with permutation product");
      }
    }
  }
  return g;
}

StabilizerGroup compute_stabilizer(std::string_view family_name, const std::map<int, NfElem>& free, int jobs) {
  return compute_stabilizer(family_surface(family(family_name), free), jobs);
}

std::vector<Perm> generate_group(const std::vector<Perm>& gens) {
  std::vector<Perm> out{identity_perm()};
  std::set<Perm> seen{identity_perm()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& s : gens) {
      Perm p = compose(s, out[i]);
      if (seen.insert(p).second) out.push_back(p);
    }
  }
  return out;
}

GroupFingerprint group_fingerprint(const std::vector<Perm>& group) {
  GroupFingerprint f;
  f.order = static_cast<int>(group.size());
  for (const Perm& p : group) ++f.element_orders[perm_order(p)];
  auto commute = [](const Perm& a, const Perm& b) { return compose(a, b) == compose(b, a); };
  for (const Perm& z : group) {
    if (std::all_of(group.begin(), group.end(), [&](const Perm& g) { return commute(z, g); })) ++f.center_order;
  }
  f.abelian = f.center_order == f.order;
  std::set<Perm> comms;
  for (const Perm& a : group) {
    for (const Perm& b : group) comms.insert(compose(compose(a, b), inverse(compose(b, a))));
  }
  f.derived_order = static_cast<int>(generate_group({comms.begin(), comms.end()}).size());
  return f;
}

std::string normalize_label(std::string_view label) {
  std::string s(label);
  auto replace = [&](const std::string& from, const std::string& to) {
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size())) s.replace(p, from.size(), to);
  };
  replace("\\rtimes", ":");
  replace("\\times", "x");
  replace("⋊", ":");
  replace("×", "x");
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '_' && c != '$' && c != '{' && c != '}') out += c;
  }
  return out;
}

namespace {

Perm perm_of(std::initializer_list<std::initializer_list<int>> cycles) {
  Perm p = identity_perm();
  for (const auto& c : cycles) {
    std::vector<int> v(c);
    for (std::size_t i = 0; i < v.size(); ++i) p[v[i]] = static_cast<std::uint8_t>(v[(i + 1) % v.size()]);
  }
  return p;
}

Perm cyclic(int n) {
  Perm p = identity_perm();
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>((i + 1) % n);
  return p;
}

// Heisenberg group of order 27: (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b') mod 3,
// acting on itself by left translation, extended by the automorphism x -> u, y -> v.
struct Heis {
  int a, b, c;
  int index() const { return a * 9 + b * 3 + c; }
  static Heis at(int i) { return {i / 9, i / 3 % 3, i % 3}; }
  Heis operator*(const Heis& o) const { return {(a + o.a) % 3, (b + o.b) % 3, (c + o.c + a * o.b) % 3}; }
  Heis pow(int n) const {
    Heis r{0, 0, 0};
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }
};

std::vector<Perm> heisenberg_extension(Heis u, Heis v) {
  const Heis x{1, 0, 0}, y{0, 1, 0};
  Heis w = u * v * u.pow(2) * v.pow(2);  // image of z = x y x^-1 y^-1
  auto left = [](const Heis& h) {
    Perm p{};
    for (int i = 0; i < 27; ++i) p[i] = static_cast<std::uint8_t>((h * Heis::at(i)).index());
    return p;
  };
  Perm phi{};
  for (int i = 0; i < 27; ++i) {
    Heis e = Heis::at(i);
    // e = x^a y^b z^(c - ab)
    int zc = ((e.c - e.a * e.b) % 3 + 3) % 3;
    phi[i] = static_cast<std::uint8_t>((u.pow(e.a) * v.pow(e.b) * w.pow(zc)).index());
  }
  return {left(x), left(y), phi};
}

// (C3)^4 modulo the diagonal, with S4 permuting coordinates, acting affinely on its 27 points.
std::vector<Perm> c3cubed_s4() {
  auto point = [](std::array<int, 4> v) { return ((v[0] - v[3] + 3) % 3) * 9 + ((v[1] - v[3] + 3) % 3) * 3 + (v[2] - v[3] + 3) % 3; };
  auto coords = [](int i) { return std::array<int, 4>{i / 9, i / 3 % 3, i % 3, 0}; };
  std::vector<Perm> gens;
  for (int k = 0; k < 3; ++k) {
    Perm p{};
    for (int i = 0; i < 27; ++i) {
      auto v = coords(i);
      v[k] = (v[k] + 1) % 3;
      p[i] = static_cast<std::uint8_t>(point(v));
    }
    gens.push_back(p);
  }
  for (std::array<int, 4> sigma : {std::array<int, 4>{1, 0, 2, 3}, std::array<int, 4>{1, 2, 3, 0}}) {
    Perm p{};
    for (int i = 0; i < 27; ++i) {
      auto v = coords(i);
      std::array<int, 4> w{};
      for (int j = 0; j < 4; ++j) w[sigma[j]] = v[j];
      p[i] = static_cast<std::uint8_t>(point(w));
    }
    gens.push_back(p);
  }
  return gens;
}

const std::map<std::string, std::function<std::vector<Perm>()>>& model_table() {
  static const std::map<std::string, std::function<std::vector<Perm>()>> t = {
      {"1", [] { return std::vector<Perm>{}; }},
      {"C2", [] { return std::vector<Perm>{cyclic(2)}; }},
      {"C4", [] { return std::vector<Perm>{cyclic(4)}; }},
      {"C8", [] { return std::vector<Perm>{cyclic(8)}; }},
      {"C2xC2", [] { return std::vector<Perm>{perm_of({{0, 1}}), perm_of({{2, 3}})}; }},
      {"S3", [] { return std::vector<Perm>{perm_of({{0, 1}}), cyclic(3)}; }},
      {"C2xS3", [] { return std::vector<Perm>{perm_of({{0, 1}}), cyclic(3), perm_of({{3, 4}})}; }},
      {"S4", [] { return std::vector<Perm>{perm_of({{0, 1}}), cyclic(4)}; }},
      {"S5", [] { return std::vector<Perm>{perm_of({{0, 1}}), cyclic(5)}; }},
      // The extension acts on the quotient by the center as -1, respectively as a square root of -1.
      {"((C3xC3):C3):C2", [] { return heisenberg_extension({2, 0, 0}, {0, 2, 0}); }},
      {"((C3xC3):C3):C4", [] { return heisenberg_extension({0, 1, 0}, {2, 0, 0}); }},
      {"(C3xC3xC3):S4", [] { return c3cubed_s4(); }},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& structure_labels() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto& [k, f] : model_table()) out.push_back(k);
    return out;
  }();
  return v;
}

std::vector<Perm> reference_model(std::string_view label) {
  auto it = model_table().find(normalize_label(label));
  if (it == model_table().end()) throw Error(ErrorCode::UnknownLabel, "no model for group " + std::string(label));
  return generate_group(it->second());
}

bool match_structure(const std::vector<Perm>& group, std::string_view label) {
  auto model = reference_model(label);
  if (model.size() != group.size()) return false;
  return group_fingerprint(model) == group_fingerprint(group);
}

namespace {

Partition orbits_of(const std::vector<std::vector<int>>& actions, int n) {
  std::vector<int> root(n, -1);
  Partition out;
  for (int s = 0; s < n; ++s) {
    if (root[s] >= 0) continue;
    std::vector<int> orb{s};
    root[s] = s;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (const auto& a : actions) {
        int t = a[orb[i]];
        if (root[t] < 0) {
          root[t] = s;
          orb.push_back(t);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<int> plane_action(const Perm& p) {
  auto a = triple_action(p);
  return {a.begin(), a.end()};
}

}  // namespace

Partition line_orbits(const std::vector<Perm>& group) {
  std::vector<std::vector<int>> acts;
  for (const Perm& p : group) acts.emplace_back(p.begin(), p.end());
  return orbits_of(acts, kNumLines);
}

Partition plane_orbits(const std::vector<Perm>& group) {
  std::vector<std::vector<int>> acts;
  for (const Perm& p : group) acts.push_back(plane_action(p));
  return orbits_of(acts, kNumTriples);
}

int orbit_image_order(const std::vector<Perm>& group, const std::vector<int>& orbit, bool planes) {
  std::set<std::vector<int>> images;
  for (const Perm& p : group) {
    std::vector<int> act = planes ? plane_action(p) : std::vector<int>(p.begin(), p.end());
    std::vector<int> r;
    for (int x : orbit) r.push_back(act[x]);
    images.insert(std::move(r));
  }
  return static_cast<int>(images.size());
}

GeneratorReport generator_report(const StabilizerGroup& g) {
  GeneratorReport r;
  auto perms = g.perms();
  std::set<Perm> span{identity_perm()};
  for (const Perm& p : perms) {
    if (span.count(p)) continue;
    r.generators.push_back(p);
    auto grown = generate_group(r.generators);
    span = std::set<Perm>(grown.begin(), grown.end());
  }
  std::set<Perm> members(perms.begin(), perms.end());
  std::set<std::array<int, kNumLines>> types;
  for (const Perm& p : perms) types.insert(cycle_type(p));
  const auto& admissible = admissible_subgroup(g.member.spec->eckardt_ids).elements;
  for (const auto& tg : g.member.spec->generators) {
    GeneratorMatch m{tg.name, tg.cycles};
    Perm p = parse_cycle_notation(tg.cycles);
    m.cycle_type_found = types.count(cycle_type(p)) > 0;
    m.exact = members.count(p) > 0;
    m.conjugate = m.exact || std::any_of(admissible.begin(), admissible.end(), [&](const Perm& a) {
                    return members.count(compose(compose(a, p), inverse(a))) > 0;
                  });
    r.table.push_back(std::move(m));
  }
  return r;
}

}  // namespace cubic27
