#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parind/error.hpp"
#include "parind/serialize.hpp"
#include "parind/verify.hpp"

namespace parind::cli {

namespace {

struct Options {
  std::string datum;
  std::string format = "json";
  std::string I;
  std::string K;
  std::string w;
  std::string chi = "trivial";
  std::string chi_prime = "trivial";
  std::string mode = "formal";
  std::string sym_action;
  std::string ext_mode = "ps";
  std::string suite = "all";
  long long r = 0;
  bool left_cuspidal = false;
  bool right_cuspidal = false;
  bool distinct_central = false;
  bool non_split = false;
  bool pth_roots = false;
  bool complexes = false;
};

std::string read_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + what + " '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Subset parse_subset(const std::string& text, int rank, const char* flag) {
  Subset s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    int idx = 0;
    bool ok = item.size() >= 2 && item[0] == 'a' &&
              std::all_of(item.begin() + 1, item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (ok) idx = std::stoi(item.substr(1));
    if (!ok || idx < 1 || idx > rank)
      throw InputError(std::string("invalid subset for ") + flag + ": '" + item + "' is not one of a1..a" +
                       std::to_string(rank));
    s = s.with(idx - 1);
  }
  return s;
}

const WeylElement& parse_weyl(const WeylGroup& W, const std::string& text) {
  if (text.empty()) throw InputError("--w is required");
  if (text == "e") return W.identity();
  if (text.front() == '[') return weyl_from_json(W, Json::parse(text, nullptr, false));
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 's') throw InputError("invalid Weyl word '" + text + "': expected e, s2s1 or [2,1]");
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos + 1) throw InputError("invalid Weyl word '" + text + "'");
    word.push_back(std::stoi(text.substr(pos + 1, end - pos - 1)) - 1);
    pos = end;
  }
  return W.from_word(word);
}

CharMode parse_mode(const std::string& m) {
  if (m == "formal") return CharMode::Formal;
  if (m == "concrete") return CharMode::Concrete;
  throw InputError("unknown character mode '" + m + "'");
}

Json inline_or_file(const std::string& text, const std::string& what) {
  std::string body = text;
  if (body.empty() || body.front() != '{') body = read_file(text, what);
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded()) throw InputError("cannot parse " + what + " as JSON");
  return j;
}

SmoothCharacter parse_character(const RootDatum& rd, const std::string& text, CharMode mode, const char* flag) {
  if (text == "trivial") return SmoothCharacter::trivial(rd, mode);
  Json j = inline_or_file(text, std::string("character for ") + flag);
  if (j.contains("mode") && j["mode"].is_string() && j["mode"].get<std::string>() != (mode == CharMode::Formal ? "formal" : "concrete"))
    throw InputError(std::string("character mode conflict: ") + flag + " is " + j["mode"].get<std::string>() +
                     " but --mode is " + (mode == CharMode::Formal ? "formal" : "concrete"));
  j["mode"] = mode == CharMode::Formal ? "formal" : "concrete";
  return character_from_json(rd, j);
}

SymbolAction parse_action(const WeylGroup& W, const std::string& text) {
  if (text.empty()) return {};
  SymbolAction a = symbol_action_from_json(W.datum(), inline_or_file(text, "symbol action"));
  a.validate(W);
  return a;
}

// ----- text rendering -----

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + scalar_text(j[i]);
    return s + "]";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      s += (first ? "" : " ") + k + "=" + scalar_text(v);
      first = false;
    }
    return s + "}";
  }
  return j.dump();
}

bool is_table(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& row) { return row.is_object(); });
}

void render(const Json& j, std::ostream& out, int indent);

void render_table(const Json& rows, std::ostream& out, int indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s(indent, ' ');
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : j.items()) {
    if (is_table(v)) {
      out << pad << k << ":\n";
      render_table(v, out, indent + 2);
    } else if (v.is_object() && !v.empty()) {
      out << pad << k << ":\n";
      render(v, out, indent + 2);
    } else {
      out << pad << k << ": " << scalar_text(v) << '\n';
    }
  }
}

bool use_color(const std::ostream& out) {
  const char* env = std::getenv("PARIND_COLOR");
  std::string mode = env ? env : "auto";
  if (mode == "never") return false;
  if (mode != "auto") throw InputError("PARIND_COLOR must be 'never' or 'auto'");
  return &out == &std::cout && ::isatty(STDOUT_FILENO);
}

// ----- commands -----

Json cmd_roots(const WeylGroup& W) {
  Json j = datum_to_json(W.datum());
  j["weyl_order"] = W.size();
  return j;
}

Json element_json(const WeylGroup& W, const WeylElement& w) {
  Json j;
  j["w"] = to_json(w);
  j["length"] = w.length();
  j["d_w"] = W.d_w(w);
  j["alpha_w"] = alpha_w(W, w).to_string();
  j["I_w"] = to_json(W.i_of_w(w));
  return j;
}

Json cmd_weyl(const WeylGroup& W, const Options& o) {
  Json j;
  if (!o.w.empty()) {
    const auto& w = parse_weyl(W, o.w);
    j["element"] = element_json(W, w);
    Json inv = Json::array();
    for (const auto& r : W.inversion_set(w)) inv.push_back(r);
    j["inversion_set"] = inv;
    j["delta_w"] = to_json(delta_w(W, w, parse_mode(o.mode)));
    return j;
  }
  j["order"] = W.size();
  j["longest"] = to_json(W.longest());
  Json els = Json::array();
  for (const auto& w : W.elements()) els.push_back(element_json(W, w));
  j["elements"] = els;
  return j;
}

Json cmd_cosets(const WeylGroup& W, Subset I, Subset K) {
  auto h = heights(W, I, K);
  Json rows = Json::array();
  for (const auto* w : W.dml(I, K)) {
    Json r;
    r["w"] = to_json(*w);
    r["length"] = w->length();
    r["d_w"] = W.d_w(*w);
    r["shift"] = -W.datum().f() * W.d_w(*w);
    r["orbit_dim"] = orbit_dim(W, I, K, *w);
    r["height"] = h.at(w->index());
    r["I_cap_wK"] = to_json(W.image(*w, K) & I);
    r["winvI_cap_K"] = to_json(W.preimage_in(*w, I, K));
    rows.push_back(r);
  }
  Json j;
  j["I"] = to_json(I);
  j["K"] = to_json(K);
  j["count"] = rows.size();
  j["representatives"] = rows;
  return j;
}

Json cmd_filtration(const WeylGroup& W, Subset I, Subset K, CharMode mode) {
  Filtration f = graded_pieces(W, I, K, mode);
  Json j;
  j["I"] = to_json(I);
  j["K"] = to_json(K);
  j["length"] = f.length();
  j["filtration"] = to_json(f);
  return j;
}

Json cmd_ps(const WeylGroup& W, Subset I, Subset K, const Options& o) {
  CharMode mode = parse_mode(o.mode);
  SmoothCharacter chi = parse_character(W.datum(), o.chi, mode, "--chi");
  SymbolAction action = parse_action(W, o.sym_action);
  Json j;
  j["I"] = to_json(I);
  j["K"] = to_json(K);
  j["chi"] = to_json(chi);
  j["coinvariants"] = to_json(ps_coinvariants(W, I, K, chi, action));
  return j;
}

Json cmd_steinberg(const WeylGroup& W, Subset I, Subset K, const Options& o, bool& all_ok) {
  CharMode mode = parse_mode(o.mode);
  Json j;
  j["I"] = to_json(I);
  j["K"] = to_json(K);
  j["coinvariants"] = to_json(steinberg_coinvariants(W, I, K, mode));
  Json certs = Json::array();
  for (const auto* w : W.dml(I, K)) {
    auto c = verify_by_resolution(W, I, K, *w);
    all_ok = all_ok && c.ok;
    Json cj;
    cj["w"] = to_json(*w);
    cj["ok"] = c.ok;
    cj["predicate"] = c.predicate;
    cj["lower_vanishes"] = c.lower_vanishes;
    cj["h0"] = to_json(c.h0);
    if (o.complexes) {
      const Subset iw = W.i_of_w(*w);
      const Subset wk = W.image(*w, K);
      cj["complex"] = to_json(build_complex(W.datum(), ComplexParams{.I0 = I, .I1 = iw, .I = I, .K = iw & wk, .order = {}}));
    }
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  return j;
}

Json cmd_ext(const WeylGroup& W, Subset I, Subset K, const Options& o) {
  Json j;
  j["mode"] = o.ext_mode;
  j["r"] = o.r;
  if (o.ext_mode == "ps") {
    CharMode mode = parse_mode(o.mode);
    PsExtQuery q;
    q.I = I;
    q.chi = parse_character(W.datum(), o.chi, mode, "--chi");
    q.chi_prime = parse_character(W.datum(), o.chi_prime, mode, "--chi-prime");
    q.degree = o.r;
    q.action = parse_action(W, o.sym_action);
    q.assumptions.split = !o.non_split;
    q.assumptions.no_pth_roots_of_unity = !o.pth_roots;
    if (auto p = W.datum().p()) q.assumptions.p_odd = *p % 2 == 1;
    j["I"] = to_json(I);
    j["chi"] = to_json(q.chi);
    j["chi_prime"] = to_json(q.chi_prime);
    j["prediction"] = to_json(predict_ps_ext(W, q));
  } else if (o.ext_mode == "parabolic") {
    ParabolicExtQuery q;
    q.I = I;
    q.K = K;
    q.degree = o.r;
    q.left_cuspidal = o.left_cuspidal;
    q.right_cuspidal = o.right_cuspidal;
    q.distinct_central = o.distinct_central;
    j["I"] = to_json(I);
    j["K"] = to_json(K);
    j["prediction"] = to_json(predict_parabolic_ext(W, q));
  } else {
    throw InputError("--mode must be 'ps' or 'parabolic'");
  }
  return j;
}

Json cmd_verify(const WeylGroup& W, const Options& o, bool& all_ok) {
  Json rows = Json::array();
  for (const auto& r : run_suites(W, o.suite)) {
    all_ok = all_ok && r.ok;
    Json row;
    row["suite"] = r.name;
    row["ok"] = r.ok;
    row["checks"] = r.checks;
    row["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    rows.push_back(row);
  }
  Json j;
  j["ok"] = all_ok;
  j["suites"] = rows;
  return j;
}

void render_verify_text(const Json& report, std::ostream& out, bool color) {
  out << "datum: " << report["datum"].get<std::string>() << '\n';
  for (const auto& row : report["result"]["suites"]) {
    bool ok = row["ok"].get<bool>();
    std::string tag = ok ? "PASS" : "FAIL";
    if (color) tag = (ok ? "\033[32m" : "\033[31m") + tag + "\033[0m";
    out << tag << "  " << row["suite"].get<std::string>() << "  (" << row["checks"].get<std::size_t>() << " checks)";
    if (!ok) out << "  " << row["counterexample"].get<std::string>();
    out << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of parabolic induction and derived coinvariants", "parind"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--datum", o.datum, "Datum spec file (JSON or TOML)")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_ik = [&](CLI::App* sub) {
    sub->add_option("--I", o.I, "Parabolic subset, e.g. \"a1,a2\" or \"\"");
    sub->add_option("--K", o.K, "Parabolic subset, e.g. \"a1\" or \"\"");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "Character mode")->check(CLI::IsMember({"formal", "concrete"}));
  };

  auto* roots = app.add_subcommand("roots", "Positive roots and weights of a datum");
  add_common(roots);
  auto* weyl = app.add_subcommand("weyl", "Weyl group elements, or one element with --w");
  add_common(weyl);
  weyl->add_option("--w", o.w, "Weyl element: e, s2s1 or [2,1]");
  add_mode(weyl);
  auto* cosets = app.add_subcommand("cosets", "Minimal double coset representatives D_{I,K}");
  add_common(cosets);
  add_ik(cosets);
  auto* filtration = app.add_subcommand("filtration", "Graded pieces of the orbit filtration by height");
  add_common(filtration);
  add_ik(filtration);
  add_mode(filtration);
  auto* ps = app.add_subcommand("ps", "Derived coinvariants of a principal series");
  add_common(ps);
  add_ik(ps);
  add_mode(ps);
  ps->add_option("--chi", o.chi, "Character: trivial, inline JSON or a file");
  ps->add_option("--sym-action", o.sym_action, "Symbol action: inline JSON or a file");
  auto* steinberg = app.add_subcommand("steinberg", "Derived coinvariants of a generalized Steinberg");
  add_common(steinberg);
  add_ik(steinberg);
  add_mode(steinberg);
  steinberg->add_flag("--complexes", o.complexes, "Include the resolution complexes with their matrices");
  auto* ext = app.add_subcommand("ext", "Ext predictions");
  add_common(ext);
  add_ik(ext);
  ext->add_option("--mode", o.ext_mode, "ps or parabolic")->check(CLI::IsMember({"ps", "parabolic"}));
  ext->add_option("--char-mode", o.mode, "Character mode")->check(CLI::IsMember({"formal", "concrete"}));
  ext->add_option("--r", o.r, "Ext degree");
  ext->add_option("--chi", o.chi, "Character of M_I");
  ext->add_option("--chi-prime", o.chi_prime, "Character of the torus");
  ext->add_option("--sym-action", o.sym_action, "Symbol action: inline JSON or a file");
  ext->add_flag("--left-cuspidal", o.left_cuspidal, "V is left cuspidal");
  ext->add_flag("--right-cuspidal", o.right_cuspidal, "W is right cuspidal");
  ext->add_flag("--distinct-central", o.distinct_central, "V and W have distinct central characters");
  ext->add_flag("--non-split", o.non_split, "The minimal Levi center is not split");
  ext->add_flag("--pth-roots-of-unity", o.pth_roots, "F contains nontrivial p-th roots of unity");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify);
  verify->add_option("--suite", o.suite, "Suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const bool color = use_color(out);
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const RootDatum rd = RootDatum::build(parse_datum_spec(read_file(o.datum, "datum spec")));
    const WeylGroup W(rd);
    const Subset I = parse_subset(o.I, rd.rank(), "--I");
    const Subset K = parse_subset(o.K, rd.rank(), "--K");

    bool all_ok = true;
    Json result;
    if (name == "roots") result = cmd_roots(W);
    else if (name == "weyl") result = cmd_weyl(W, o);
    else if (name == "cosets") result = cmd_cosets(W, I, K);
    else if (name == "filtration") result = cmd_filtration(W, I, K, parse_mode(o.mode));
    else if (name == "ps") result = cmd_ps(W, I, K, o);
    else if (name == "steinberg") result = cmd_steinberg(W, I, K, o, all_ok);
    else if (name == "ext") result = cmd_ext(W, I, K, o);
    else result = cmd_verify(W, o, all_ok);

    Json report;
    report["schema"] = kSchemaVersion;
    report["command"] = name;
    report["datum"] = rd.label();
    report["result"] = result;
    if (o.format == "json") {
      out << report.dump(2) << '\n';
    } else if (name == "verify") {
      render_verify_text(report, out, color);
    } else {
      render(report, out, 0);
    }
    return all_ok ? 0 : 2;
  } catch (const Error& e) {
    err << "parind: error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "parind: error: malformed JSON input: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace parind::cli
