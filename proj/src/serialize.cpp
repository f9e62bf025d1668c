#include "parind/serialize.hpp"

#include <sstream>

#include "parind/error.hpp"

namespace parind {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse " + what + ": " + e.what());
  }
}

template <class T>
T get_as(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

const char* mode_name(CharMode m) { return m == CharMode::Formal ? "formal" : "concrete"; }

CharMode mode_from(const std::string& s) {
  if (s == "formal") return CharMode::Formal;
  if (s == "concrete") return CharMode::Concrete;
  throw InputError("unknown character mode '" + s + "'");
}

}  // namespace

DatumSpec datum_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("datum spec must be an object");
  DatumSpec spec;
  for (const auto& [key, value] : j.items()) {
    if (key == "type") {
      spec.type = get_as<std::string>(j, "type");
    } else if (key == "cartan") {
      auto rows = get_as<std::vector<std::vector<long long>>>(j, "cartan");
      IntMatrix c(rows.size(), rows.empty() ? 0 : rows.front().size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != c.cols()) throw InputError("cartan matrix rows have different lengths");
        for (std::size_t k = 0; k < rows[r].size(); ++k) c(r, k) = rows[r][k];
      }
      spec.cartan = c;
    } else if (key == "d") {
      spec.d = get_as<std::vector<long long>>(j, "d");
    } else if (key == "z_dim") {
      spec.z_dim = get_as<long long>(j, "z_dim");
    } else if (key == "f") {
      spec.f = get_as<long long>(j, "f");
    } else if (key == "p") {
      if (!value.is_null()) spec.p = get_as<long long>(j, "p");
    } else {
      throw InputError("unknown datum field '" + key + "'");
    }
  }
  return spec;
}

DatumSpec parse_datum_spec(const std::string& text) {
  const std::string body = trim(text);
  if (body.empty()) throw InputError("empty datum spec");
  if (body.front() == '{') return datum_spec_from_json(parse_json(body, "datum spec"));

  Json j = Json::object();
  std::istringstream in(body);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw InputError("datum spec line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    j[key] = parse_json(value, "value of '" + key + "'");
  }
  return datum_spec_from_json(j);
}

Json datum_to_json(const RootDatum& rd) {
  Json j;
  j["type"] = rd.label();
  j["rank"] = rd.rank();
  Json cartan = Json::array();
  for (int r = 0; r < rd.rank(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < rd.rank(); ++c) row.push_back(rd.cartan()(r, c));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  j["d"] = rd.weights();
  j["z_dim"] = rd.z_dim();
  j["f"] = rd.f();
  j["p"] = rd.p() ? Json(*rd.p()) : Json(nullptr);
  Json roots = Json::array();
  for (const auto& r : rd.positive_roots()) roots.push_back({{"coeffs", r}, {"d", rd.d(r)}});
  j["positive_roots"] = roots;
  return j;
}

Json to_json(Subset s) {
  Json j = Json::array();
  for (int i : s.elements()) j.push_back(i + 1);
  return j;
}

Subset subset_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw InputError("subset must be an array of simple-root indices");
  Subset s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("subset entries must be integers");
    int i = x.get<int>();
    if (i < 1 || i > rank) throw InputError("simple-root index " + std::to_string(i) + " out of range");
    s = s.with(i - 1);
  }
  return s;
}

Json to_json(const WeylElement& w) {
  Json j = Json::array();
  for (int i : w.word()) j.push_back(i + 1);
  return j;
}

const WeylElement& weyl_from_json(const WeylGroup& W, const Json& j) {
  if (!j.is_array()) throw InputError("Weyl element must be an array of simple-root indices");
  std::vector<int> word;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("Weyl word entries must be integers");
    word.push_back(x.get<int>() - 1);
  }
  return W.from_word(word);
}

Json to_json(const SmoothCharacter& chi) {
  Json j;
  j["cyclo"] = chi.cyclo();
  Json sym = Json::object();
  for (const auto& [k, v] : chi.sym()) sym[k] = v;
  j["sym"] = sym;
  j["mode"] = mode_name(chi.mode());
  return j;
}

SmoothCharacter character_from_json(const RootDatum& rd, const Json& j) {
  if (!j.is_object()) throw InputError("character must be an object");
  CharMode mode = j.contains("mode") ? mode_from(get_as<std::string>(j, "mode")) : CharMode::Formal;
  IntVec cyclo = j.contains("cyclo") ? get_as<IntVec>(j, "cyclo") : IntVec(rd.rank(), 0);
  std::map<std::string, long long> sym;
  if (j.contains("sym")) sym = get_as<std::map<std::string, long long>>(j, "sym");
  return SmoothCharacter::make(rd, mode, std::move(cyclo), std::move(sym));
}

SymbolAction symbol_action_from_json(const RootDatum& rd, const Json& j) {
  // {"a1": {"chi1": {"to": "chi2", "shift": [0]}, ...}, ...}
  if (!j.is_object()) throw InputError("symbol action must be an object keyed by simple roots");
  SymbolAction action;
  for (const auto& [key, table] : j.items()) {
    if (key.size() < 2 || key[0] != 'a') throw InputError("symbol action key '" + key + "' is not a simple root name");
    int idx = 0;
    try {
      idx = std::stoi(key.substr(1)) - 1;
    } catch (const std::exception&) {
      throw InputError("symbol action key '" + key + "' is not a simple root name");
    }
    if (idx < 0 || idx >= rd.rank()) throw InputError("symbol action key '" + key + "' out of range");
    if (!table.is_object()) throw InputError("symbol action entry for '" + key + "' must be an object");
    for (const auto& [name, img] : table.items()) {
      SymbolImage image;
      image.to = get_as<std::string>(img, "to");
      image.shift = img.contains("shift") ? get_as<IntVec>(img, "shift") : IntVec(rd.rank(), 0);
      action.declare(idx, name, std::move(image));
    }
  }
  return action;
}

Json to_json(const GradedPiece& p) {
  Json j;
  j["w"] = to_json(p.w);
  j["shift"] = p.shift;
  j["delta"] = to_json(p.delta);
  j["coinv_levi"] = to_json(p.coinv_levi);
  j["ind_levi"] = to_json(p.ind_levi);
  return j;
}

GradedPiece graded_piece_from_json(const WeylGroup& W, const Json& j) {
  GradedPiece p;
  p.w = weyl_from_json(W, j.at("w"));
  p.shift = get_as<long long>(j, "shift");
  p.delta = character_from_json(W.datum(), j.at("delta"));
  p.coinv_levi = subset_from_json(j.at("coinv_levi"), W.rank());
  p.ind_levi = subset_from_json(j.at("ind_levi"), W.rank());
  return p;
}

Json to_json(const Filtration& f) {
  Json j = Json::array();
  for (std::size_t h = 0; h < f.groups.size(); ++h) {
    Json pieces = Json::array();
    for (const auto& p : f.groups[h]) pieces.push_back(to_json(p));
    j.push_back({{"height", h + 1}, {"pieces", pieces}});
  }
  return j;
}

Filtration filtration_from_json(const WeylGroup& W, const Json& j) {
  if (!j.is_array()) throw InputError("filtration must be an array");
  Filtration f;
  for (const auto& group : j) {
    int height = get_as<int>(group, "height");
    if (height != static_cast<int>(f.groups.size()) + 1) throw InputError("filtration heights must be 1..r in order");
    std::vector<GradedPiece> pieces;
    for (const auto& pj : group.at("pieces")) {
      GradedPiece p = graded_piece_from_json(W, pj);
      p.height = height;
      pieces.push_back(std::move(p));
    }
    f.groups.push_back(std::move(pieces));
  }
  return f;
}

Json to_json(const SummandDescriptor& s) {
  Json j;
  j["degree"] = s.degree;
  j["w"] = to_json(s.w);
  j["ind_levi"] = to_json(s.ind_levi);
  j["character"] = to_json(s.character);
  if (s.constituent)
    j["constituent"] = {{"ambient", to_json(s.constituent->ambient)}, {"base", to_json(s.constituent->base)}};
  else
    j["constituent"] = nullptr;
  return j;
}

SummandDescriptor summand_from_json(const WeylGroup& W, const Json& j) {
  SummandDescriptor s;
  s.degree = get_as<long long>(j, "degree");
  s.w = weyl_from_json(W, j.at("w"));
  s.ind_levi = subset_from_json(j.at("ind_levi"), W.rank());
  s.character = character_from_json(W.datum(), j.at("character"));
  if (j.contains("constituent") && !j.at("constituent").is_null()) {
    const auto& c = j.at("constituent");
    s.constituent = SteinbergLabel{subset_from_json(c.at("ambient"), W.rank()), subset_from_json(c.at("base"), W.rank())};
  }
  return s;
}

Json to_json(const CoinvariantTable& t) {
  Json j = Json::array();
  for (const auto& [deg, rows] : t) {
    Json summands = Json::array();
    for (const auto& s : rows) summands.push_back(to_json(s));
    j.push_back({{"j", deg}, {"summands", summands}});
  }
  return j;
}

CoinvariantTable coinvariants_from_json(const WeylGroup& W, const Json& j) {
  if (!j.is_array()) throw InputError("coinvariant table must be an array");
  CoinvariantTable t;
  for (const auto& row : j) {
    long long deg = get_as<long long>(row, "j");
    for (const auto& s : row.at("summands")) t[deg].push_back(summand_from_json(W, s));
  }
  return t;
}

Json to_json(const ExtPrediction& e) {
  Json j;
  j["verdict"] = to_string(e.verdict);
  j["justification"] = e.justification;
  if (e.verdict == Verdict::Dimension) j["dimension"] = e.dimension;
  if (!e.descriptor.empty()) j["descriptor"] = e.descriptor;
  if (!e.hom_sum.empty()) {
    Json hs = Json::array();
    for (const auto& h : e.hom_sum)
      hs.push_back({{"alpha", h.alpha + 1}, {"delta", to_json(h.delta)}, {"descriptor", h.descriptor}});
    j["hom_sum"] = hs;
  }
  if (!e.candidates.empty()) {
    Json c = Json::array();
    for (const auto& w : e.candidates) c.push_back(to_json(w));
    j["candidates"] = c;
  }
  return j;
}

ExtPrediction prediction_from_json(const WeylGroup& W, const Json& j) {
  ExtPrediction e;
  e.verdict = verdict_from_string(get_as<std::string>(j, "verdict"));
  e.justification = get_as<std::string>(j, "justification");
  if (j.contains("dimension")) e.dimension = get_as<long long>(j, "dimension");
  if (j.contains("descriptor")) e.descriptor = get_as<std::string>(j, "descriptor");
  if (j.contains("hom_sum"))
    for (const auto& h : j.at("hom_sum"))
      e.hom_sum.push_back(HomSummand{get_as<int>(h, "alpha") - 1, character_from_json(W.datum(), h.at("delta")),
                                     get_as<std::string>(h, "descriptor")});
  if (j.contains("candidates"))
    for (const auto& c : j.at("candidates")) e.candidates.push_back(weyl_from_json(W, c));
  return e;
}

Json to_json(const MultFreeModule& m) {
  Json c = Json::array();
  for (Subset J : m.constituents()) c.push_back(to_json(J));
  return {{"ambient", to_json(m.ambient())}, {"constituents", c}};
}

Json to_json(const CoefficientComplex& cx) {
  const auto& p = cx.params();
  Json j;
  j["I0"] = to_json(p.I0);
  j["I1"] = to_json(p.I1);
  j["I"] = to_json(p.I);
  j["K"] = to_json(p.K);
  Json order = Json::array();
  for (int k : p.order) order.push_back(k + 1);
  j["order"] = order;
  Json terms = Json::array();
  for (int n = 0; n >= cx.min_degree(); --n) {
    const auto& t = cx.term(n);
    Json summands = Json::array();
    for (std::size_t s = 0; s < t.summands.size(); ++s)
      summands.push_back({{"J", to_json(t.summands[s])}, {"module", to_json(t.modules[s])}});
    terms.push_back({{"degree", n}, {"dimension", t.basis.size()}, {"summands", summands}});
  }
  j["terms"] = terms;
  Json diffs = Json::array();
  for (int n = cx.min_degree(); n < 0; ++n) {
    const IntMatrix& d = cx.differential(n);
    Json rows = Json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c));
      rows.push_back(row);
    }
    diffs.push_back({{"from", n}, {"to", n + 1}, {"matrix", rows}});
  }
  j["differentials"] = diffs;
  return j;
}

}  // namespace parind
