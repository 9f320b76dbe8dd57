#include "tnet/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tnet/io.hpp"

namespace tnet {

namespace {

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TheoremViolated: return kExitViolation;
    case ErrorCode::ParseError:
    case ErrorCode::BadParameters:
    case ErrorCode::NonPrime:
    case ErrorCode::TooLarge:
    case ErrorCode::SpecMismatch: return kExitUsage;
    default: return kExitPrecondition;
  }
}

std::vector<long long> int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an integer list: " + s);
    }
  }
  return out;
}

FieldPtr make_field(int p, int k) {
  if (p <= 0) throw Error(ErrorCode::BadParameters, "--p is required");
  return Field::create(p, k);
}

// key: value lines for the scalar members of a report
void print_human(std::ostream& out, const Json& j, const std::string& indent = "") {
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      if (key == "census" || key == "histogram" || key == "by_class" || key == "letters") {
        out << indent << key << ": " << v.dump() << "\n";
      } else if (v.contains("line")) {
        out << indent << key << ": " << v["line"].dump() << "\n";
      } else if (v.contains("coeffs")) {
        out << indent << key << ": " << v["coeffs"].dump() << "\n";
      } else {
        out << indent << key << ":\n";
        print_human(out, v, indent + "  ");
      }
    } else if (v.is_array() && (key == "kernel" || key == "frame" || key == "projectivity" || key == "cells")) {
      out << indent << key << ": " << v.size() << " rows\n";
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

struct Output {
  bool json = false;
  std::string path;

  void emit(std::ostream& out, const Json& j) const {
    if (!path.empty()) write_json_file(path, j);
    if (json) {
      out << j.dump(2) << "\n";
    } else {
      print_human(out, j);
    }
  }
};

void add_output(CLI::App* c, Output& o) {
  c->add_flag("--json", o.json, "machine JSON on standard output");
  c->add_option("-o,--output", o.path, "write JSON to this file");
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string family;
  int p = 0, k = 1;
  std::size_t n = 0;
  long long shift_a = -1, shift_b = -1;
  int variant = 0;
  long long a = 0, b = 0, c = 0;
  std::string cubic, origin;
  std::size_t triple = 0;
  int r = 0, q = 0;
  Output out;
};

DualThreeNet construct(const ConstructArgs& x) {
  if (x.family == "pasch") return pasch_net(make_field(x.p, x.k), x.variant);
  if (x.family == "n3") {
    const FieldPtr F = make_field(x.p, x.k);
    return n3_family(F, F->from_int(x.a), F->from_int(x.b), F->from_int(x.c));
  }
  if (x.family == "projection") return construct_projection(x.r, x.q).net;
  if (x.family == "subgroup") {
    const FieldPtr F = make_field(x.p, x.k);
    const auto co = int_list(x.cubic);
    if (co.size() != 10) throw Error(ErrorCode::BadParameters, "--cubic needs ten coefficients");
    Vec v;
    for (long long e : co) v.push_back(F->from_int(e));
    const Curve cubic(*F, 3, v);
    Point O;
    if (x.origin.empty()) {
      const auto pts = rational_points(*F, cubic);
      if (pts.empty()) throw Error(ErrorCode::PreconditionFailed, "cubic has no rational point");
      O = pts.front();
    } else {
      const auto oc = int_list(x.origin);
      if (oc.size() != 3) throw Error(ErrorCode::BadParameters, "--origin needs three coordinates");
      O = make_point(*F, {F->from_int(oc[0]), F->from_int(oc[1]), F->from_int(oc[2])});
    }
    const CubicGroup g(F, cubic, O);
    const auto triples = subgroup_and_cosets(g, x.n);
    if (x.triple >= triples.size()) throw Error(ErrorCode::BadParameters, "--triple out of range");
    return construct_subgroup_type(g, triples[x.triple]);
  }
  const auto kind = conic_line_kind_from_string(x.family);
  if (!kind) throw Error(ErrorCode::BadParameters, "unknown family " + x.family);
  ConicLineParams params{*kind, x.n, std::nullopt, std::nullopt};
  if (x.shift_a >= 0) params.shift_a = static_cast<std::uint32_t>(x.shift_a);
  if (x.shift_b >= 0) params.shift_b = static_cast<std::uint32_t>(x.shift_b);
  return construct_conic_line(make_field(x.p, x.k), params);
}

int run_construct(const ConstructArgs& x, std::ostream& out) {
  const DualThreeNet net = construct(x);
  const Json j = net_to_json(net);
  if (!x.out.path.empty()) write_json_file(x.out.path, j);
  if (x.out.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "family: " << net.provenance.family << "\n";
    out << "field: GF(" << net.field->order() << ")\n";
    out << "order: " << net.order() << "\n";
    out << "class: " << to_string(classify_regularity(net).kind) << "\n";
    if (!x.out.path.empty()) out << "written: " << x.out.path << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& path, const Output& o, std::ostream& out) {
  const DualThreeNet net = read_net_file(path);
  const AxiomReport ax = verify_axioms(net);
  Json j{{"order", net.order()}, {"axioms", to_json(ax, *net.field)}};
  if (ax.ok) j["regularity"] = to_json(classify_regularity(net));
  o.emit(out, j);
  return ax.ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- theorem

struct TheoremArgs {
  std::string check, net;
  std::uint64_t seed = 1;
  int p = 0, k = 1;
  long long a = 0, b = 0, c = 0;
  std::size_t min_samples = 2000, max_samples = 20000, members = 20;
  Output out;
};

DualThreeNet need_net(const TheoremArgs& x) {
  if (x.net.empty()) throw Error(ErrorCode::ParseError, "--check " + x.check + " needs a net file");
  return read_net_file(x.net);
}

int run_theorem(const TheoremArgs& x, std::ostream& out) {
  Json j{{"check", x.check}};
  bool pass = true;
  if (x.check == "thm1") {
    const auto net = need_net(x);
    j["report"] = to_json(check_theorem1(net, x.seed), *net.field);
  } else if (x.check == "converse") {
    const auto net = need_net(x);
    j["report"] = to_json(check_converse(net), *net.field);
  } else if (x.check == "redei") {
    const auto net = need_net(x);
    const auto r = redei_report(net, x.seed);
    pass = r.ok();
    j["report"] = to_json(r, *net.field);
  } else if (x.check == "n4") {
    const auto net = need_net(x);
    const auto c = check_n4(net);
    if (c.closed_form) pass = c.closed_form_nonzero && c.closed_form_in_kernel && c.side_condition;
    if (c.labeling_found && !c.case_arc && !c.case_cyclic) pass = c.forced_structure && c.d_relation && c.odd_characteristic;
    j["report"] = to_json(c, *net.field);
  } else if (x.check == "n2") {
    const auto net = need_net(x);
    const auto r = check_n2(net, x.members, x.seed);
    pass = r.pencil_ok && r.cubic_nullity == 4;
    j["report"] = to_json(r, *net.field);
  } else if (x.check == "n3") {
    const FieldPtr F = make_field(x.p, x.k);
    const auto r = check_n3(F, F->from_int(x.a), F->from_int(x.b), F->from_int(x.c));
    pass = r.holds();
    j["report"] = to_json(r);
  } else if (x.check == "waterhouse") {
    const FieldPtr F = make_field(x.p, x.k);
    const auto r = waterhouse_scan(F, WaterhouseOptions{x.seed, x.min_samples, x.max_samples});
    pass = r.bound_violations == 0 && r.missing.empty();
    j["report"] = to_json(r);
  }
  j["pass"] = pass;
  x.out.emit(out, j);
  return pass ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  int p = 0, k = 1;
  std::size_t n = 0;
  std::uint64_t budget = 50'000'000;
  unsigned jobs = 1;
  std::size_t max_results = 0;
  std::string col[3];
  bool arcs = false, hyperovals = false, no_pin = false, json = false;
  std::string path, summary;
};

int run_search(const SearchArgs& x, std::ostream& out, std::ostream& err) {
  SearchTask t;
  t.field = make_field(x.p, x.k);
  t.n = x.n;
  t.pin_frame = !x.no_pin;
  for (int i = 0; i < 3; ++i) {
    if (x.col[i] == "require") t.collinear[i] = true;
    if (x.col[i] == "forbid") t.collinear[i] = false;
  }
  t.arcs = x.arcs;
  t.hyperovals = x.hyperovals;
  t.budget = x.budget;
  t.jobs = x.jobs;
  t.max_results = x.max_results;

  std::ofstream file;
  if (!x.path.empty()) {
    file.open(x.path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + x.path);
  }
  std::vector<std::size_t> nullities;
  auto emit = [&](const DualThreeNet& net) {
    const std::string line = net_to_json(net).dump();
    if (file.is_open()) file << line << "\n";
    if (x.json) out << line << "\n";
    if (x.hyperovals) nullities.push_back(curves_through(*net.field, net.all_points(), 3).nullity());
  };
  const SearchSummary s = enumerate_nets(t, emit);
  Json j = to_json(s);
  if (x.hyperovals) j["cubic_nullity"] = nullities;
  if (!x.summary.empty()) write_json_file(x.summary, j);
  std::ostream& human = x.json ? err : out;
  print_human(human, j);
  if (s.budget_exceeded) human << "budget exceeded after " << s.emitted << " nets\n";
  return kExitOk;
}

// ---------------------------------------------------------------- latin

int run_latin(const std::string& path, const Output& o, std::ostream& out) {
  const DualThreeNet net = read_net_file(path);
  if (!verify_axioms(net).ok) throw Error(ErrorCode::PreconditionFailed, "input is not a dual 3-net");
  const LatinSquare L = latin_square_of(net);
  Json j = to_json(L);
  j["valid"] = L.valid();
  j["intercalates"] = intercalates(L);
  if (L.order() <= 6) j["isotopic_to_cyclic"] = isotopic(L, cyclic_square(L.order()));
  if (L.order() == 4) j["isotopic_to_klein"] = isotopic(L, klein_square());
  if (!o.path.empty()) write_json_file(o.path, j);
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& row : L.cells) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << "\n";
    }
    Json rest = j;
    rest.erase("cells");
    print_human(out, rest);
  }
  return L.valid() ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual 3-nets in finite projective planes"};
  app.name("tnet");
  app.require_subcommand(1);

  ConstructArgs cx;
  auto* construct_cmd = app.add_subcommand("construct", "build a net from a family");
  construct_cmd
      ->add_option("--family", cx.family, "pasch, n3, subgroup, parabola, hyperbola, circle, lines_mult, lines_add, projection")
      ->required()
      ->check(CLI::IsMember({"pasch", "n3", "subgroup", "parabola", "hyperbola", "circle", "lines_mult", "lines_add", "projection"}));
  construct_cmd->add_option("--p", cx.p, "characteristic");
  construct_cmd->add_option("--k", cx.k, "extension degree")->capture_default_str();
  construct_cmd->add_option("--subgroup-order,--n", cx.n, "order of the net");
  construct_cmd->add_option("--shift-a", cx.shift_a, "coset representative of A (element index)");
  construct_cmd->add_option("--shift-b", cx.shift_b, "coset representative of B (element index)");
  construct_cmd->add_option("--variant", cx.variant, "Pasch role assignment 0..5");
  construct_cmd->add_option("--a", cx.a);
  construct_cmd->add_option("--b", cx.b);
  construct_cmd->add_option("--c", cx.c);
  construct_cmd->add_option("--cubic", cx.cubic, "ten integer coefficients X3,Y3,Z3,X2Y,X2Z,Y2X,Y2Z,Z2X,Z2Y,XYZ");
  construct_cmd->add_option("--origin", cx.origin, "identity point x,y,z");
  construct_cmd->add_option("--triple", cx.triple, "index of the coset triple");
  construct_cmd->add_option("--r", cx.r, "subplane order (projection)");
  construct_cmd->add_option("--q", cx.q, "plane order (projection)");
  add_output(construct_cmd, cx.out);

  std::string verify_path;
  Output verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "check the axioms and classify a net file");
  verify_cmd->add_option("net", verify_path, "net file")->required();
  add_output(verify_cmd, verify_out);

  TheoremArgs tx;
  auto* theorem_cmd = app.add_subcommand("theorem", "run a validator");
  theorem_cmd->add_option("--check", tx.check)
      ->required()
      ->check(CLI::IsMember({"thm1", "converse", "n4", "n3", "n2", "waterhouse", "redei"}));
  theorem_cmd->add_option("net", tx.net, "net file");
  theorem_cmd->add_option("--seed", tx.seed)->capture_default_str();
  theorem_cmd->add_option("--p", tx.p);
  theorem_cmd->add_option("--k", tx.k)->capture_default_str();
  theorem_cmd->add_option("--a", tx.a);
  theorem_cmd->add_option("--b", tx.b);
  theorem_cmd->add_option("--c", tx.c);
  theorem_cmd->add_option("--min-samples", tx.min_samples)->capture_default_str();
  theorem_cmd->add_option("--max-samples", tx.max_samples)->capture_default_str();
  theorem_cmd->add_option("--members", tx.members, "random pencil members (n2)")->capture_default_str();
  add_output(theorem_cmd, tx.out);

  SearchArgs sx;
  auto* search_cmd = app.add_subcommand("search", "enumerate nets as JSON lines");
  search_cmd->add_option("--p", sx.p)->required();
  search_cmd->add_option("--k", sx.k)->capture_default_str();
  search_cmd->add_option("--n", sx.n)->required();
  search_cmd->add_option("--budget", sx.budget, "search-tree nodes")->capture_default_str();
  search_cmd->add_option("--jobs", sx.jobs)->capture_default_str()->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-results", sx.max_results);
  const char* names[3] = {"--collinear-a", "--collinear-b", "--collinear-c"};
  for (int i = 0; i < 3; ++i) search_cmd->add_option(names[i], sx.col[i])->check(CLI::IsMember({"require", "forbid"}));
  search_cmd->add_flag("--arcs", sx.arcs, "pairwise unions are arcs");
  search_cmd->add_flag("--hyperovals", sx.hyperovals, "pairwise unions are hyperovals");
  search_cmd->add_flag("--no-pin", sx.no_pin, "do not pin A to a frame");
  search_cmd->add_flag("--json", sx.json, "JSON lines on standard output");
  search_cmd->add_option("-o,--output", sx.path, "JSON lines file");
  search_cmd->add_option("--summary", sx.summary, "summary JSON file");

  std::string latin_path;
  Output latin_out;
  auto* latin_cmd = app.add_subcommand("latin", "latin square of a net file");
  latin_cmd->add_option("net", latin_path, "net file")->required();
  add_output(latin_cmd, latin_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct_cmd) return run_construct(cx, out);
    if (*verify_cmd) return run_verify(verify_path, verify_out, out);
    if (*theorem_cmd) return run_theorem(tx, out);
    if (*search_cmd) return run_search(sx, out, err);
    if (*latin_cmd) return run_latin(latin_path, latin_out, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.code() == ErrorCode::TheoremViolated) {
      Json j{{"status", "violation"}, {"message", e.what()}};
      err << j.dump() << "\n";
    }
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tnet
