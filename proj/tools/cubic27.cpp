#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cubic27/acceptance.hpp"
#include "cubic27/stabilizer.hpp"
#include "json.hpp"

using namespace cubic27;
using Json = nlohmann::ordered_json;

namespace {

struct Request {
  std::string command;
  std::string family;
  std::string params;
  bool params_given = false;
  std::string format = "text";
  std::string out;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t verify_seed = AcceptanceOptions{}.seed;
};

const char* kVarNames[] = {"b", "c", "d", "e", "f"};

std::string tau(int id) { return "tau" + std::to_string(id + 1); }

Json taus(const std::vector<int>& ids) {
  Json a = Json::array();
  for (int t : ids) a.push_back(tau(t));
  return a;
}

Json line_names(const std::vector<int>& ids) {
  Json a = Json::array();
  for (int l : ids) a.push_back(line_name(l));
  return a;
}

template <class V>
Json vec(const V& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json field_json(const FamilySpec& s) {
  FieldRef k = s.field();
  if (k->is_rationals()) return "Q";
  return Json{{"generator", k->generator()}, {"minpoly", k->minpoly_str(k->generator())}};
}

FamilyMember member(const Request& r) {
  const FamilySpec& s = family(r.family);
  std::map<int, NfElem> free;
  if (r.params_given) {
    free = parse_params(s, r.params);
  } else {
    std::mt19937_64 rng(r.seed);
    free = sample_parameters(s, rng);
  }
  return family_surface(s, free);
}

Json params_json(const FamilyMember& m) {
  Json p;
  for (int i = 0; i < 5; ++i) p[kVarNames[i]] = m.params[i].str();
  return p;
}

Json member_head(const FamilyMember& m) {
  return Json{{"family", m.spec->name}, {"field", field_json(*m.spec)}, {"params", params_json(m)}};
}

Json eckardt_json(const FamilyMember& m) {
  auto pts = eckardt_points(m.lines());
  Json list = Json::array();
  for (const auto& p : pts) {
    const auto& tr = triples()[p.triple_id];
    list.push_back(Json{{"plane", tau(p.triple_id)},
                        {"lines", line_names({tr[0], tr[1], tr[2]})},
                        {"point", vec(p.point.v)}});
  }
  auto rep = collinearity_report(pts);
  Json col = Json::array();
  for (const auto& c : rep.collinear) col.push_back(taus(c));
  Json out{{"count", pts.size()}, {"points", list}, {"collinear", col}};
  out["common_plane"] = rep.common_plane ? vec(rep.common_plane->v) : Json(nullptr);
  return out;
}

Json cmd_families() {
  Json list = Json::array();
  for (const auto& s : families()) {
    Json lam = Json::array();
    for (const auto& sub : s.lambda) lam.push_back(Json{{"symbol", kVarNames[param_slot(sub.var)]}, {"value", sub.expr}});
    Json free = Json::array();
    for (int v : s.free_params) free.push_back(kVarNames[param_slot(v)]);
    list.push_back(Json{{"name", s.name},
                        {"field", field_json(s)},
                        {"free_params", free},
                        {"substitutions", lam},
                        {"eckardt_planes", taus(s.eckardt_ids)},
                        {"dimension", s.dim},
                        {"equation", family_equation(s).str()},
                        {"candidates", s.candidate_count},
                        {"stabilizer_order", s.stab_order},
                        {"structure", s.structure}});
  }
  return Json{{"families", list}};
}

Json cmd_surface(const Request& r) {
  auto m = member(r);
  Json out = member_head(m);
  out["equation"] = form_poly(m.surface.form).str();
  out["family_equation"] = family_equation(*m.spec).str();
  out["matches_reference_table"] = table_equation_matches(*m.spec);
  out["eckardt_count"] = eckardt_points(m.lines()).size();
  return out;
}

Json cmd_lines(const Request& r) {
  auto m = member(r);
  Json out = member_head(m);
  Json lines = Json::array();
  for (int k = 0; k < kNumLines; ++k) lines.push_back(Json{{"label", line_name(k)}, {"pluecker", vec(m.lines()[k].p)}});
  out["lines"] = lines;
  auto planes = tritangent_planes(m.lines());
  Json pl = Json::array();
  for (int t = 0; t < kNumTriples; ++t) {
    const auto& tr = triples()[t];
    pl.push_back(Json{{"plane", tau(t)}, {"lines", line_names({tr[0], tr[1], tr[2]})}, {"equation", vec(planes[t].v)}});
  }
  out["tritangent_planes"] = pl;
  return out;
}

Json cmd_eckardt(const Request& r) {
  auto m = member(r);
  Json out = member_head(m);
  out["eckardt"] = eckardt_json(m);
  return out;
}

Json fingerprint_json(const GroupFingerprint& f) {
  Json h;
  for (auto [o, n] : f.element_orders) h[std::to_string(o)] = n;
  return Json{{"order", f.order},
              {"element_orders", h},
              {"abelian", f.abelian},
              {"center_order", f.center_order},
              {"derived_order", f.derived_order}};
}

Json orbits_json(const std::vector<Perm>& g) {
  Json lo = Json::array(), po = Json::array();
  for (const auto& o : line_orbits(g)) lo.push_back(Json{{"lines", line_names(o)}, {"image_order", orbit_image_order(g, o, false)}});
  for (const auto& o : plane_orbits(g)) po.push_back(Json{{"planes", taus(o)}, {"image_order", orbit_image_order(g, o, true)}});
  return Json{{"line_orbits", lo}, {"plane_orbits", po}};
}

Json cmd_stabilizer(const Request& r) {
  auto m = member(r);
  auto g = compute_stabilizer(m, r.jobs);
  auto perms = g.perms();
  Json out = member_head(m);
  out["candidates"] = g.candidate_count;
  out["order"] = g.order();
  out["structure"] = m.spec->structure;
  out["structure_matches"] = match_structure(perms, m.spec->structure);
  out["fingerprint"] = fingerprint_json(group_fingerprint(perms));
  auto rep = generator_report(g);
  Json gens = Json::array();
  for (const Perm& p : rep.generators) gens.push_back(cycle_notation(p));
  out["generators"] = gens;
  Json table = Json::array();
  for (const auto& t : rep.table) {
    table.push_back(Json{{"name", t.name},
                         {"cycles", t.cycles},
                         {"cycle_type_found", t.cycle_type_found},
                         {"in_group", t.exact},
                         {"conjugate_in_group", t.conjugate}});
  }
  out["reference_generators"] = table;
  Json orb = orbits_json(perms);
  out["line_orbits"] = orb["line_orbits"];
  out["plane_orbits"] = orb["plane_orbits"];
  out["eckardt"] = eckardt_json(m);
  return out;
}

Json cmd_orbits(const Request& r) {
  auto m = member(r);
  auto g = compute_stabilizer(m, r.jobs);
  Json out = member_head(m);
  out["order"] = g.order();
  Json orb = orbits_json(g.perms());
  for (auto& [k, v] : orb.items()) out[k] = v;
  return out;
}

Json cmd_e6_stats() {
  long ext = 0;
  for (const auto& l : enumerate_lsets()) {
    for (int x : lset_extensions(l)) ext += x >= 0;
  }
  return Json{{"lsets", enumerate_lsets().size()}, {"extended", ext}, {"group_order", e6_group().size()}};
}

Json cmd_verify(const Request& r, bool stream) {
  AcceptanceOptions opts;
  opts.seed = r.verify_seed;
  opts.jobs = r.jobs;
  Json list = Json::array();
  bool all = true;
  run_acceptance(opts, [&](const CriterionResult& c) {
    all = all && c.pass;
    if (stream) {
      std::fprintf(stderr, "AC%-2d %s  %s\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str());
    }
    list.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  });
  return Json{{"seed", r.verify_seed}, {"all_pass", all}, {"criteria", list}};
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool is_flat(const Json& v) {
  if (v.is_object()) return false;
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const Json& x) { return is_flat(x); });
  return true;
}

void render_text(const Json& v, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (is_flat(it.value())) {
        os << pad << it.key() << ": " << scalar_text(it.value()) << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render_text(it.value(), os, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (is_flat(x)) {
        os << pad << "- " << scalar_text(x) << "\n";
      } else {
        os << pad << "-\n";
        render_text(x, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

std::string verify_text(const Json& doc) {
  std::ostringstream os;
  for (const auto& c : doc["criteria"]) {
    char head[64];
    std::snprintf(head, sizeof head, "AC%-2d %s  ", c["id"].get<int>(), c["pass"].get<bool>() ? "PASS" : "FAIL");
    os << head << c["name"].get<std::string>() << "\n     " << c["detail"].get<std::string>() << "\n";
  }
  os << (doc["all_pass"].get<bool>() ? "all criteria pass" : "some criteria fail") << "\n";
  return os.str();
}

void write_output(const Request& r, const std::string& text) {
  if (r.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path target(r.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    f << text;
  }
  std::filesystem::rename(tmp, target);
}

int run(const Request& r) {
  Json doc;
  int status = 0;
  try {
    if (r.command == "families") {
      doc = cmd_families();
    } else if (r.command == "surface") {
      doc = cmd_surface(r);
    } else if (r.command == "lines") {
      doc = cmd_lines(r);
    } else if (r.command == "eckardt") {
      doc = cmd_eckardt(r);
    } else if (r.command == "stabilizer") {
      doc = cmd_stabilizer(r);
    } else if (r.command == "orbits") {
      doc = cmd_orbits(r);
    } else if (r.command == "e6-stats") {
      doc = cmd_e6_stats();
    } else {
      doc = cmd_verify(r, r.format == "text" && !r.out.empty());
      status = doc["all_pass"].get<bool>() ? 0 : 1;
    }
  } catch (const Error& e) {
    doc = Json{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
    status = 2;
  }
  std::string text;
  if (r.format == "json") {
    text = doc.dump(2) + "\n";
  } else if (r.command == "verify" && !doc.contains("error")) {
    text = verify_text(doc);
  } else {
    std::ostringstream os;
    render_text(doc, os, 0);
    text = os.str();
  }
  if (status == 2 && r.out.empty()) {
    std::cerr << text;
  } else {
    write_output(r, text);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines, Eckardt points and stabilizers of cubic surfaces"};
  app.require_subcommand(1);
  Request req;
  auto add_common = [&](CLI::App* sub, bool needs_family) {
    sub->add_option("--format", req.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", req.out, "Write the report to this file");
    if (needs_family) {
      sub->add_option("--family", req.family, "Family name, e.g. Se6")->required();
      sub->add_option("--params", req.params, "Free parameters, e.g. c=1,e=2+w");
      sub->add_option("--seed", req.seed, "Seed for a random member when --params is absent");
    }
  };
  std::vector<std::pair<std::string, std::string>> cmds = {
      {"families", "List the Eckardt families"},
      {"surface", "Equation of a family member"},
      {"lines", "The 27 lines and 45 tritangent planes"},
      {"eckardt", "Eckardt points and their collinearities"},
      {"stabilizer", "Projective stabilizer with structure and generators"},
      {"orbits", "Line and plane orbits of the stabilizer"},
      {"e6-stats", "L-set and E6 counts"},
      {"verify", "Run the acceptance suite"}};
  for (const auto& [name, help] : cmds) {
    auto* sub = app.add_subcommand(name, help);
    bool fam = name == "surface" || name == "lines" || name == "eckardt" || name == "stabilizer" || name == "orbits";
    add_common(sub, fam);
    if (name == "stabilizer" || name == "orbits" || name == "verify") {
      sub->add_option("--jobs", req.jobs, "Worker threads")->check(CLI::PositiveNumber);
    }
    if (name == "verify") sub->add_option("--seed", req.verify_seed, "Base seed for sampled members");
    sub->callback([&req, sub, name = name] {
      req.command = name;
      if (auto* p = sub->get_option_no_throw("--params")) req.params_given = p->count() > 0;
    });
  }
  CLI11_PARSE(app, argc, argv);
  try {
    return run(req);
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", {{"code", "InternalError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 3;
  }
}
