// operad-forge: a command-line front end for the coloured-operad
// kernel. Trees are passed in the DSL ("v1:c(l1:a,l2:b)", "e:c"),
// profiles in the tuple notation "(a,b;c)" with "(;c)" for empty
// inputs, and tables as JSON files. Output is deterministic; --json
// mirrors every text report one-to-one.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "operads/json_io.hpp"
#include "operads/operads.hpp"

namespace {

using namespace operads;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Output {
  bool as_json = false;
  json payload = json::object();
  std::vector<std::string> lines;

  void line(const std::string& s) { lines.push_back(s); }

  void flush() {
    if (as_json) {
      payload["output"] = lines;
      std::cout << payload.dump(2) << "\n";
    } else {
      for (const std::string& s : lines) std::cout << s << "\n";
    }
  }
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::set<Colour> parse_colour_list(const std::string& spec) {
  std::set<Colour> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string tok = spec.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!tok.empty()) {
      if (!is_colour_token(tok)) throw ParseError("bad colour token '" + tok + "'");
      out.insert(Colour(tok));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::set<Colour> colours_of_tree(const ColouredTree& t) {
  std::set<Colour> out;
  if (t.is_edge()) {
    out.insert(t.edge_colour());
    return out;
  }
  struct Rec {
    std::set<Colour>& out;
    void run(const Vertex& v) {
      out.insert(v.colour);
      for (const Child& c : v.children) {
        if (c.is_leaf())
          out.insert(c.leaf().colour);
        else
          run(c.vertex());
      }
    }
  } rec{out};
  rec.run(t.root());
  return out;
}

int report_outcome(Output& out, const VerifyReport& rep) {
  for (const std::string& n : rep.notes) out.line("note: " + n);
  for (const std::string& v : rep.violations) out.line("violation: " + v);
  if (rep.ok())
    out.line("OK (" + std::to_string(rep.checks) + " checks)");
  else
    out.line("FAIL (" + std::to_string(rep.violations.size()) + " violations)");
  out.payload["ok"] = rep.ok();
  out.payload["checks"] = rep.checks;
  out.payload["violations"] = rep.violations;
  out.payload["notes"] = rep.notes;
  return rep.ok() ? kExitOk : kExitViolation;
}

// Splits "name" or "name@(a,b;c)" into the element reference.
struct ElementRef {
  std::string name;
  std::optional<Profile> profile;
};

ElementRef parse_element_ref(const std::string& s) {
  std::size_t at = s.find('@');
  if (at == std::string::npos) return {s, std::nullopt};
  return {s.substr(0, at), parse_profile(s.substr(at + 1))};
}

std::vector<Profile> candidate_profiles(const FiniteOperad& P, const ElementRef& ref,
                                        const std::optional<int>& arity,
                                        const std::optional<Colour>& output) {
  std::vector<Profile> out;
  for (const auto& [p, elems] : P.base.components) {
    if (ref.profile && p != *ref.profile) continue;
    if (arity && p.arity() != *arity) continue;
    if (output && p.output != *output) continue;
    if (std::binary_search(elems.begin(), elems.end(), ref.name)) out.push_back(p);
  }
  return out;
}

// gamma on named elements: the unique type-checking combination of
// component assignments is used; anything else asks for @-qualification.
int run_gamma(Output& out, const FiniteOperad& P, const std::string& espec,
              const std::vector<std::string>& aspecs) {
  ElementRef eref = parse_element_ref(espec);
  std::vector<ElementRef> arefs;
  for (const std::string& a : aspecs) arefs.push_back(parse_element_ref(a));

  std::vector<std::pair<OperadElement, std::vector<OperadElement>>> combos;
  for (const Profile& p :
       candidate_profiles(P, eref, static_cast<int>(arefs.size()), std::nullopt)) {
    std::vector<std::vector<Profile>> arg_choices;
    bool dead = false;
    for (std::size_t i = 0; i < arefs.size(); ++i) {
      arg_choices.push_back(candidate_profiles(P, arefs[i], std::nullopt, p.inputs[i]));
      if (arg_choices.back().empty()) dead = true;
    }
    if (dead) continue;
    std::vector<std::size_t> idx(arefs.size(), 0);
    for (;;) {
      std::vector<OperadElement> args;
      for (std::size_t i = 0; i < arefs.size(); ++i)
        args.push_back(OperadElement{arg_choices[i][idx[i]], arefs[i].name});
      combos.push_back({OperadElement{p, eref.name}, std::move(args)});
      if (combos.size() > 64)
        throw ParseError("too many matching components; qualify elements as name@(a,b;c)");
      if (arefs.empty()) break;
      std::size_t d = arefs.size();
      bool carried = false;
      while (d-- > 0) {
        if (++idx[d] < arg_choices[d].size()) {
          carried = true;
          break;
        }
        idx[d] = 0;
      }
      if (!carried) break;
    }
  }
  if (combos.empty())
    throw ParseError("no component contains the named elements with matching colours");
  if (combos.size() > 1)
    throw ParseError("ambiguous element names; qualify as name@(a,b;c)");

  OperadElement result = gamma(P, combos[0].first, combos[0].second);
  out.line(result.name + " @ " + format_profile(result.profile));
  out.payload["ok"] = true;
  out.payload["result"] = result.name;
  out.payload["profile"] = format_profile(result.profile);
  return kExitOk;
}

int run_roundtrip(Output& out, const FiniteOperad& Q, int max_vertices, int max_leaves,
                  std::size_t elems_cap) {
  VerifyReport rep;
  VerifyReport qrep = verify_operad(Q);
  rep.checks += qrep.checks;
  for (const std::string& v : qrep.violations) rep.violations.push_back("input operad: " + v);
  if (!rep.violations.empty()) return report_outcome(out, rep);

  std::vector<std::string> extraction;
  FiniteOperad back = operad_from_sc_algebra(make_sc_algebra(Q), &extraction);
  for (const std::string& v : extraction) rep.violations.push_back("extraction: " + v);
  ++rep.checks;
  if (back == Q)
    rep.notes.push_back("table identity after the round trip: ok");
  else
    rep.violations.push_back("extracted operad differs from the input tables");

  // evaluator agreement tree by tree
  std::size_t trees = 0, evals = 0, skipped = 0;
  for_each_support_tree(Q, max_vertices, max_leaves, [&](const SCElement& x) {
    ++trees;
    TreeProfiles tp = x.profiles();
    std::vector<std::vector<std::string>> tuples{{}};
    for (const Profile& p : tp.vertices) {
      std::vector<std::vector<std::string>> next;
      for (const std::vector<std::string>& t : tuples)
        for (const std::string& e : Q.base.elements(p)) {
          std::vector<std::string> u = t;
          u.push_back(e);
          next.push_back(std::move(u));
          if (next.size() > elems_cap) break;
        }
      tuples = std::move(next);
      if (tuples.size() > elems_cap) tuples.resize(elems_cap);
    }
    for (const std::vector<std::string>& elems : tuples) {
      ++rep.checks;
      // a truncated support cannot evaluate every tree; both routes
      // must then fail in the same way
      std::optional<OperadElement> via_q, via_back;
      try {
        via_q = sc_evaluate(Q, x, elems);
      } catch (const DomainError&) {
      }
      try {
        via_back = sc_evaluate(back, x, elems);
      } catch (const DomainError&) {
      }
      if (via_q != via_back)
        rep.violations.push_back("evaluator disagreement on " + x.str());
      else if (via_q)
        ++evals;
      else
        ++skipped;
    }
  });
  rep.notes.push_back("evaluator agreement on " + std::to_string(trees) + " trees, " +
                      std::to_string(evals) + " evaluations (" + std::to_string(skipped) +
                      " outside the truncated support)");
  return report_outcome(out, rep);
}

int run(int argc, char** argv) {
  CLI::App app{"coloured operads in finite sets: trees, composition, verification"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "emit the report as JSON");

  int exit_code = kExitOk;

  // ---- tree ----------------------------------------------------------
  CLI::App* tree = app.add_subcommand("tree", "tree DSL utilities");
  tree->require_subcommand(1);
  CLI::App* tree_check = tree->add_subcommand("check", "validate a tree");
  std::string tree_text, tree_file, tree_colours;
  tree_check->add_option("tree", tree_text, "tree in the DSL");
  tree_check->add_option("-f,--file", tree_file, "read the tree from a file");
  tree_check->add_option("--colours", tree_colours, "comma-separated colour set");
  tree_check->callback([&] {
    std::string text = tree_file.empty() ? tree_text : read_text_file(tree_file);
    if (text.empty()) throw ParseError("no tree given");
    ColouredTree t = parse_tree_syntax(text);
    VerifyReport rep;
    for (std::string& v : validate(t, parse_colour_list(tree_colours)))
      rep.violations.push_back(std::move(v));
    rep.checks = 1;
    out.payload["canonical"] = serialize_tree(t);
    if (rep.ok()) out.line("canonical: " + serialize_tree(t));
    exit_code = report_outcome(out, rep);
  });

  // ---- sc ------------------------------------------------------------
  CLI::App* sc = app.add_subcommand("sc", "the operad of numbered coloured trees");
  sc->require_subcommand(1);

  CLI::App* sc_compose_cmd = sc->add_subcommand("compose", "simultaneous substitution");
  std::string sc_host;
  std::vector<std::string> sc_args;
  sc_compose_cmd->add_option("tree", sc_host, "host tree")->required();
  sc_compose_cmd->add_option("--with", sc_args, "argument trees, one per vertex in order");
  sc_compose_cmd->callback([&] {
    std::set<Colour> colours = colours_of_tree(parse_tree(sc_host));
    std::vector<ColouredTree> args;
    for (const std::string& a : sc_args) {
      args.push_back(parse_tree(a));
      for (const Colour& c : colours_of_tree(args.back())) colours.insert(c);
    }
    SCElement x(parse_tree(sc_host), colours);
    std::vector<SCElement> ys;
    for (ColouredTree& t : args) ys.push_back(SCElement(std::move(t), colours));
    SCElement result = sc_compose(x, ys);
    out.line(result.str());
    out.payload["ok"] = true;
    out.payload["result"] = result.str();
  });

  CLI::App* sc_circ_cmd = sc->add_subcommand("circ", "partial composition at one vertex");
  std::string circ_host, circ_arg;
  int circ_index = 0;
  sc_circ_cmd->add_option("tree", circ_host, "host tree")->required();
  sc_circ_cmd->add_option("-i", circ_index, "vertex number to substitute")->required();
  sc_circ_cmd->add_option("arg", circ_arg, "argument tree")->required();
  sc_circ_cmd->callback([&] {
    std::set<Colour> colours = colours_of_tree(parse_tree(circ_host));
    for (const Colour& c : colours_of_tree(parse_tree(circ_arg))) colours.insert(c);
    SCElement x(parse_tree(circ_host), colours);
    SCElement y(parse_tree(circ_arg), colours);
    SCElement result = sc_circ(x, circ_index, y);
    out.line(result.str());
    out.payload["ok"] = true;
    out.payload["result"] = result.str();
  });

  CLI::App* sc_enum = sc->add_subcommand("enumerate", "list a whole component");
  std::string enum_profiles, enum_boundary, enum_colours;
  int limit_vertices = 8, limit_leaves = 10;
  sc_enum->add_option("--profiles", enum_profiles, "vertex profiles, e.g. \"(a;a);(a,b;a)\"");
  sc_enum->add_option("--boundary", enum_boundary, "boundary profile")->required();
  sc_enum->add_option("--colours", enum_colours, "colour set (default: colours mentioned)");
  sc_enum->add_option("--limit-vertices", limit_vertices, "refuse larger inputs (default 8)");
  sc_enum->add_option("--limit-leaves", limit_leaves, "refuse larger boundaries (default 10)");
  sc_enum->callback([&] {
    std::vector<Profile> profiles = parse_profile_list(enum_profiles);
    Profile boundary = parse_profile(enum_boundary);
    if (static_cast<int>(profiles.size()) > limit_vertices)
      throw ParseError("more than " + std::to_string(limit_vertices) +
                       " vertex profiles; raise --limit-vertices to proceed");
    if (boundary.arity() > limit_leaves)
      throw ParseError("boundary wider than " + std::to_string(limit_leaves) +
                       " leaves; raise --limit-leaves to proceed");
    std::set<Colour> colours = parse_colour_list(enum_colours);
    if (colours.empty()) {
      for (const Profile& p : profiles) {
        colours.insert(p.output);
        colours.insert(p.inputs.begin(), p.inputs.end());
      }
      colours.insert(boundary.output);
      colours.insert(boundary.inputs.begin(), boundary.inputs.end());
    }
    json items = json::array();
    for (const ColouredTree& t : enumerate_trees(colours, profiles, boundary)) {
      out.line(serialize_tree(t));
      items.push_back(serialize_tree(t));
    }
    out.payload["ok"] = true;
    out.payload["result"] = items;
  });

  // ---- operad --------------------------------------------------------
  CLI::App* op = app.add_subcommand("operad", "table-level coloured operads");
  op->require_subcommand(1);

  CLI::App* op_verify = op->add_subcommand("verify", "check the operad laws");
  std::string op_file;
  op_verify->add_option("file", op_file, "operad JSON")->required();
  op_verify->callback([&] {
    exit_code = report_outcome(out, verify_operad(operad_from_json(read_json_file(op_file))));
  });

  CLI::App* op_gamma = op->add_subcommand("gamma", "full composition product");
  std::string gamma_file, gamma_elem, gamma_args;
  op_gamma->add_option("file", gamma_file, "operad JSON")->required();
  op_gamma->add_option("-e", gamma_elem, "outer element (name or name@(profile))")->required();
  op_gamma->add_option("-a", gamma_args, "comma-separated argument elements");
  op_gamma->callback([&] {
    std::vector<std::string> args;
    if (!gamma_args.empty()) {
      std::size_t start = 0;
      for (;;) {
        std::size_t comma = gamma_args.find(',', start);
        args.push_back(
            gamma_args.substr(start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    exit_code = run_gamma(out, operad_from_json(read_json_file(gamma_file)), gamma_elem, args);
  });

  CLI::App* op_monoid = op->add_subcommand("from-monoid", "the arity-one operad of a monoid");
  std::string monoid_file;
  op_monoid->add_option("file", monoid_file, "monoid JSON")->required();
  op_monoid->callback([&] {
    FiniteOperad P = operad_from_monoid(monoid_from_json(read_json_file(monoid_file)));
    out.line(operad_to_json(P).dump(2));
    out.payload["ok"] = true;
    out.payload["result"] = operad_to_json(P);
  });

  CLI::App* op_ass = op->add_subcommand("ass", "the truncated permutation operad");
  int ass_arity = 0;
  op_ass->add_option("--max-arity", ass_arity, "truncation bound")->required();
  op_ass->callback([&] {
    FiniteOperad P = ass_truncated(ass_arity);
    out.line(operad_to_json(P).dump(2));
    out.payload["ok"] = true;
    out.payload["result"] = operad_to_json(P);
  });

  CLI::App* op_terminal = op->add_subcommand("terminal", "the one-point operad");
  std::string term_colours;
  int term_arity = 0;
  op_terminal->add_option("--colours", term_colours, "comma-separated colour set")->required();
  op_terminal->add_option("--max-arity", term_arity, "arity bound")->required();
  op_terminal->callback([&] {
    FiniteOperad P = terminal_operad(parse_colour_list(term_colours), term_arity);
    out.line(operad_to_json(P).dump(2));
    out.payload["ok"] = true;
    out.payload["result"] = operad_to_json(P);
  });

  // ---- free ----------------------------------------------------------
  CLI::App* fr = app.add_subcommand("free", "the free operad on a collection");
  fr->require_subcommand(1);
  CLI::App* fr_enum = fr->add_subcommand("enumerate", "list decorated-tree classes");
  std::string coll_file, free_boundary;
  int free_max_vertices = 0;
  fr_enum->add_option("file", coll_file, "collection JSON")->required();
  fr_enum->add_option("--boundary", free_boundary, "boundary profile")->required();
  fr_enum->add_option("--max-vertices", free_max_vertices, "vertex bound")->required();
  fr_enum->callback([&] {
    Collection K = collection_from_json(read_json_file(coll_file));
    VerifyReport krep;
    for (std::string& v : validate_collection(K)) krep.violations.push_back(std::move(v));
    if (!krep.ok()) {
      exit_code = report_outcome(out, krep);
      return;
    }
    json items = json::array();
    for (const DecoratedTree& t :
         free_elements(K, parse_profile(free_boundary), free_max_vertices)) {
      out.line(serialize_decorated(t));
      items.push_back(serialize_decorated(t));
    }
    out.payload["ok"] = true;
    out.payload["result"] = items;
  });

  // ---- algebra -------------------------------------------------------
  CLI::App* alg = app.add_subcommand("algebra", "operad actions on finite families");
  alg->require_subcommand(1);

  auto load_algebra = [&](const std::string& path) {
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    return algebra_from_json(read_json_file(path), [&](const std::string& ref) {
      return read_json_file((base / ref).string());
    });
  };

  CLI::App* alg_verify = alg->add_subcommand("verify", "check the algebra laws");
  std::string alg_file;
  alg_verify->add_option("file", alg_file, "algebra JSON")->required();
  alg_verify->callback(
      [&] { exit_code = report_outcome(out, verify_algebra(load_algebra(alg_file))); });

  CLI::App* alg_map = alg->add_subcommand("map-check", "check a map of algebras");
  std::string map_a, map_b, map_f;
  alg_map->add_option("A", map_a, "source algebra JSON")->required();
  alg_map->add_option("B", map_b, "target algebra JSON")->required();
  alg_map->add_option("f", map_f, "per-colour maps JSON")->required();
  alg_map->callback([&] {
    exit_code = report_outcome(
        out, verify_algebra_map(load_algebra(map_a), load_algebra(map_b),
                                colour_maps_from_json(read_json_file(map_f))));
  });

  // ---- roundtrip -----------------------------------------------------
  CLI::App* rt = app.add_subcommand(
      "roundtrip", "operad -> tree-operad algebra -> operad, both directions");
  std::string rt_file;
  int rt_vertices = 3, rt_leaves = 4;
  std::size_t rt_cap = 128;
  rt->add_option("file", rt_file, "operad JSON")->required();
  rt->add_option("--max-vertices", rt_vertices, "tree size bound (default 3)");
  rt->add_option("--max-leaves", rt_leaves, "boundary width bound (default 4)");
  rt->add_option("--max-tuples", rt_cap, "element tuples per tree (default 128)");
  rt->callback([&] {
    exit_code = run_roundtrip(out, operad_from_json(read_json_file(rt_file)), rt_vertices,
                              rt_leaves, rt_cap);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return kExitInput;
  }
  out.flush();
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
