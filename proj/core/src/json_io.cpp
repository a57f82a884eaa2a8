#include "symdyn/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? std::string("at /") : "at " + where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok |= it.key() == k;
    if (!ok) fail(where, "unexpected key \"" + it.key() + "\"");
  }
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) fail(at(where, key), "expected an array");
  return v;
}

std::string string_value(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Integer integer_value(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(where, "expected an integer");
    }
  }
  fail(where, "expected an integer");
}

Gap gap_value(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  Gap v = j.get<Gap>();
  if (v < 0) fail(where, "expected a nonnegative integer, got " + std::to_string(v));
  return v;
}

std::set<Gap> gap_list(const Json& j, const char* key, const std::string& where, bool require_sorted) {
  const Json& arr = array_field(j, key, where);
  std::set<Gap> out;
  Gap prev = -1;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Gap v = gap_value(arr[i], at(at(where, key), i));
    if (require_sorted && v <= prev) fail(at(at(where, key), i), "members must be strictly increasing");
    prev = v;
    out.insert(v);
  }
  return out;
}

Json gap_json(const std::set<Gap>& s) {
  Json arr = Json::array();
  for (Gap g : s) arr.push_back(g);
  return arr;
}

}  // namespace

Json load_json(const std::string& text_or_path) {
  std::string text = text_or_path;
  auto first = text.find_first_not_of(" \t\r\n");
  bool inline_json = first != std::string::npos && (text[first] == '[' || text[first] == '{');
  if (!inline_json) {
    std::ifstream in(text_or_path);
    if (!in) throw InputError("cannot open \"" + text_or_path + "\"");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Word word_from_json(const Json& j, const Alphabet& alphabet, const std::string& where) {
  Word w;
  if (j.is_string()) {
    try {
      w = alphabet.parse(j.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string s = string_value(j[i], at(where, i));
      if (!alphabet.contains(s)) fail(at(where, i), "symbol \"" + s + "\" is not in the alphabet");
      w.push_back(s);
    }
  } else {
    fail(where, "expected a word (string or array of symbols)");
  }
  return w;
}

Json word_to_json(const Word& w) {
  bool simple = true;
  for (const auto& s : w) simple &= split_codepoints(s).size() == 1;
  if (simple) return w.str();
  Json arr = Json::array();
  for (const auto& s : w) arr.push_back(s);
  return arr;
}

ForbiddenSetSFT sft_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an SFT object");
  allow_keys(j, {"alphabet", "forbidden", "contracted"}, "");
  const Json& a = array_field(j, "alphabet", "");
  std::vector<Symbol> syms;
  for (std::size_t i = 0; i < a.size(); ++i) syms.push_back(string_value(a[i], at("/alphabet", i)));
  Alphabet alphabet;
  try {
    alphabet = Alphabet(syms);
  } catch (const InputError& e) {
    fail("/alphabet", e.what());
  }
  const Json& f = array_field(j, "forbidden", "");
  std::set<Word> forbidden;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Word w = word_from_json(f[i], alphabet, at("/forbidden", i));
    if (w.empty()) fail(at("/forbidden", i), "forbidden words must be non-empty");
    forbidden.insert(w);
  }
  return ForbiddenSetSFT(alphabet, forbidden);
}

Json sft_to_json(const ForbiddenSetSFT& sft) {
  Json j;
  j["alphabet"] = sft.alphabet().symbols();
  Json f = Json::array();
  for (const auto& w : sft.forbidden()) f.push_back(word_to_json(w));
  j["forbidden"] = f;
  return j;
}

Graph graph_from_json(const Json& j) {
  if (j.is_array()) return graph_from_adjacency(matrix_from_json(j));
  if (!j.is_object()) fail("", "expected a graph object");
  allow_keys(j, {"vertices", "edges", "adjacency"}, "");
  Graph g;
  const Json& vs = array_field(j, "vertices", "");
  std::set<std::string> names;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string name = string_value(vs[i], at("/vertices", i));
    if (!names.insert(name).second) fail(at("/vertices", i), "duplicate vertex \"" + name + "\"");
    g.add_vertex(name);
  }
  const Json& es = array_field(j, "edges", "");
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string where = at("/edges", i);
    if (!es[i].is_object()) fail(where, "expected an edge object");
    allow_keys(es[i], {"from", "to", "label"}, where);
    std::string from = string_value(field(es[i], "from", where), at(where, "from"));
    std::string to = string_value(field(es[i], "to", where), at(where, "to"));
    auto f = g.find_vertex(from);
    auto t = g.find_vertex(to);
    if (!f) fail(at(where, "from"), "unknown vertex \"" + from + "\"");
    if (!t) fail(at(where, "to"), "unknown vertex \"" + to + "\"");
    Symbol label;
    if (es[i].contains("label")) {
      label = string_value(es[i]["label"], at(where, "label"));
      if (label.empty()) fail(at(where, "label"), "labels must be non-empty");
    }
    g.add_edge(*f, *t, label);
  }
  if (j.contains("adjacency")) {
    IntMatrix a;
    try {
      a = matrix_from_json(j["adjacency"]);
    } catch (const InputError& e) {
      fail("/adjacency", e.what());
    }
    if (!(a == adjacency(g))) fail("/adjacency", "does not match the edge list");
  }
  return g;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices();
  Json es = Json::array();
  for (const auto& e : g.edges()) {
    Json ej;
    ej["from"] = g.vertices()[e.from];
    ej["to"] = g.vertices()[e.to];
    if (!e.label.empty()) ej["label"] = e.label;
    es.push_back(ej);
  }
  j["edges"] = es;
  return j;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail("", "expected a matrix (array of arrays)");
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) fail(at("", i), "expected a row array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) fail(at("", i), "row length " + std::to_string(j[i].size()) + " differs from " + std::to_string(cols));
  }
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_value(j[i][c], at(at("", i), c));
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(i, c).fits_slong_p()) {
        row.push_back(m(i, c).get_si());
      } else {
        row.push_back(m(i, c).get_str());
      }
    }
    j.push_back(row);
  }
  return j;
}

SignedBFGroup bf_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected a Bowen-Franks object");
  allow_keys(j, {"sign", "divisors"}, "");
  SignedBFGroup g;
  const Json& s = field(j, "sign", "");
  if (!s.is_number_integer() || s.get<int>() < -1 || s.get<int>() > 1) fail("/sign", "sign must be -1, 0 or 1");
  g.sign = s.get<int>();
  const Json& d = array_field(j, "divisors", "");
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer v = integer_value(d[i], at("/divisors", i));
    if (v < 0) fail(at("/divisors", i), "divisors must be nonnegative");
    if (i > 0 && g.divisors.back() != 0 && v % g.divisors.back() != 0) fail(at("/divisors", i), "divisors must form a divisibility chain");
    if (i > 0 && g.divisors.back() == 0 && v != 0) fail(at("/divisors", i), "zero divisors must come last");
    g.divisors.push_back(v);
  }
  return g;
}

Json bf_to_json(const SignedBFGroup& g) {
  Json j;
  j["sign"] = g.sign;
  Json d = Json::array();
  for (const auto& v : g.divisors) {
    if (v.fits_slong_p()) {
      d.push_back(v.get_si());
    } else {
      d.push_back(v.get_str());
    }
  }
  j["divisors"] = d;
  return j;
}

Json entropy_to_json(const EntropyEstimate& e) {
  Json j;
  j["value"] = e.value;
  j["method"] = to_string(e.method);
  if (e.n_used) j["n"] = *e.n_used;
  if (e.empty_shift) j["empty_shift"] = true;
  return j;
}

SGapSet sgap_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected a gap-set object");
  std::string kind = string_value(field(j, "kind", ""), "/kind");
  SGapSet s;
  if (kind == "finite") {
    allow_keys(j, {"kind", "elements"}, "");
    s = FiniteGaps{gap_list(j, "elements", "", false)};
  } else if (kind == "eventually_periodic") {
    allow_keys(j, {"kind", "R", "T", "N"}, "");
    PeriodicGaps p;
    p.R = gap_list(j, "R", "", false);
    p.T = gap_list(j, "T", "", false);
    p.N = gap_value(field(j, "N", ""), "/N");
    s = p;
  } else if (kind == "sampled") {
    allow_keys(j, {"kind", "members", "bound"}, "");
    SampledGaps smp;
    smp.members = gap_list(j, "members", "", true);
    smp.bound = gap_value(field(j, "bound", ""), "/bound");
    s = smp;
  } else {
    fail("/kind", "unknown gap-set kind \"" + kind + "\"");
  }
  validate(s);
  return s;
}

Json sgap_to_json(const SGapSet& s) {
  Json j;
  if (auto f = std::get_if<FiniteGaps>(&s)) {
    j["kind"] = "finite";
    j["elements"] = gap_json(f->elements);
  } else if (auto p = std::get_if<PeriodicGaps>(&s)) {
    j["kind"] = "eventually_periodic";
    j["R"] = gap_json(p->R);
    j["T"] = gap_json(p->T);
    j["N"] = p->N;
  } else {
    const auto& smp = std::get<SampledGaps>(s);
    j["kind"] = "sampled";
    j["members"] = gap_json(smp.members);
    j["bound"] = smp.bound;
  }
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["type"] = to_string(c.type);
  if (c.bound) j["bound"] = *c.bound;
  return j;
}

Json verdict_to_json(const FEVerdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  if (v.witness) {
    Json w;
    w["n"] = v.witness->n;
    w["r"] = v.witness->r;
    j["witness"] = w;
  } else if (!v.reason.empty()) {
    j["reason"] = v.reason;
  }
  if (v.bound) j["bound"] = *v.bound;
  return j;
}

MoveSpec move_spec_from_json(const Json& m, const Alphabet& alphabet, const std::string& where) {
  if (!m.is_object()) fail(where, "expected a move object");
  std::string op = string_value(field(m, "op", where), at(where, "op"));
  MoveSpec spec;
  if (op == "expand") {
    allow_keys(m, {"op", "symbol"}, where);
    spec.kind = MoveSpec::Kind::Expand;
    spec.symbol = string_value(field(m, "symbol", where), at(where, "symbol"));
  } else if (op == "contract") {
    allow_keys(m, {"op", "symbol", "removed"}, where);
    spec.kind = MoveSpec::Kind::Contract;
    spec.symbol = string_value(field(m, "symbol", where), at(where, "symbol"));
    spec.other = string_value(field(m, "removed", where), at(where, "removed"));
  } else if (op == "word_contract") {
    allow_keys(m, {"op", "word", "symbol"}, where);
    spec.kind = MoveSpec::Kind::WordContract;
    spec.word = word_from_json(field(m, "word", where), alphabet, at(where, "word"));
    if (m.contains("symbol")) spec.other = string_value(m["symbol"], at(where, "symbol"));
  } else if (op == "rename") {
    allow_keys(m, {"op", "map"}, where);
    spec.kind = MoveSpec::Kind::Recode;
    const Json& map = field(m, "map", where);
    if (!map.is_object()) fail(at(where, "map"), "expected an object from symbol to symbol");
    for (auto it = map.begin(); it != map.end(); ++it)
      spec.map.table[Word{it.key()}] = string_value(it.value(), at(at(where, "map"), it.key()));
  } else {
    fail(at(where, "op"), "unknown move \"" + op + "\"");
  }
  return spec;
}

MovePipeline pipeline_from_json(const Json& j, const ForbiddenSetSFT* source) {
  if (!j.is_object()) fail("", "expected a pipeline object");
  allow_keys(j, {"source", "moves"}, "");
  ForbiddenSetSFT src;
  if (source) {
    src = *source;
  } else {
    if (!j.contains("source")) fail("", "missing key \"source\" (or pass a source shift separately)");
    try {
      src = sft_from_json(j["source"]);
    } catch (const InputError& e) {
      fail("/source", e.what());
    }
  }
  MovePipeline p(src);
  const Json& moves = array_field(j, "moves", "");
  for (std::size_t i = 0; i < moves.size(); ++i) {
    // Words are read over the alphabet reached so far.
    MoveSpec spec = move_spec_from_json(moves[i], p.target().alphabet(), at("/moves", i));
    try {
      p.apply(spec);
    } catch (const Error& e) {
      fail(at("/moves", i), e.what());
    }
  }
  return p;
}

std::string detect_kind(const Json& j) {
  if (j.is_array()) return "matrix";
  if (!j.is_object()) return "unknown";
  if (j.contains("alphabet")) return "sft";
  if (j.contains("vertices")) return "graph";
  if (j.contains("moves")) return "pipeline";
  if (j.contains("valid")) return "validation";
  if (j.contains("kind")) return "sgap";
  if (j.contains("sign")) return "bf";
  if (j.contains("method")) return "entropy";
  if (j.contains("outcome")) return "verdict";
  if (j.contains("type")) return "classification";
  if (j.contains("flow_equivalent")) return "decision";
  if (j.contains("words")) return "language";
  if (j.contains("image")) return "word_image";
  return "unknown";
}

namespace {

void validate_entropy(const Json& j) {
  allow_keys(j, {"value", "method", "n", "empty_shift"}, "");
  const Json& v = field(j, "value", "");
  if (!v.is_number() || v.get<double>() < 0) fail("/value", "expected a nonnegative number");
  std::string m = string_value(field(j, "method", ""), "/method");
  if (m != "perron" && m != "wordcount") fail("/method", "expected \"perron\" or \"wordcount\"");
  if (j.contains("n")) gap_value(j["n"], "/n");
  if (m == "wordcount" && !j.contains("n")) fail("", "word-count estimates need \"n\"");
  if (j.contains("empty_shift") && !j["empty_shift"].is_boolean()) fail("/empty_shift", "expected a boolean");
}

void validate_verdict(const Json& j) {
  allow_keys(j, {"outcome", "witness", "reason", "bound"}, "");
  std::string o = string_value(field(j, "outcome", ""), "/outcome");
  if (o != "equivalent" && o != "not_equivalent" && o != "not_equivalent_up_to" && o != "unknown_up_to") {
    fail("/outcome", "unknown outcome \"" + o + "\"");
  }
  if (j.contains("witness")) {
    const Json& w = j["witness"];
    if (!w.is_object()) fail("/witness", "expected an object");
    allow_keys(w, {"n", "r"}, "/witness");
    gap_value(field(w, "n", "/witness"), "/witness/n");
    if (!field(w, "r", "/witness").is_number_integer()) fail("/witness/r", "expected an integer");
  }
  if (j.contains("reason")) string_value(j["reason"], "/reason");
  if (j.contains("bound")) gap_value(j["bound"], "/bound");
  if ((o == "not_equivalent_up_to" || o == "unknown_up_to") && !j.contains("bound")) fail("", "bounded outcomes need \"bound\"");
}

}  // namespace

std::string validate_document(const Json& j, const std::string& requested) {
  std::string kind = requested == "auto" ? detect_kind(j) : requested;
  if (kind == "matrix") {
    IntMatrix m = matrix_from_json(j);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) < 0) fail(at(at("", r), c), "negative entry " + m(r, c).get_str());
    if (!m.is_square()) fail("", "matrix must be square");
  } else if (kind == "sft") {
    sft_from_json(j);
  } else if (kind == "graph") {
    graph_from_json(j);
  } else if (kind == "pipeline") {
    pipeline_from_json(j);
  } else if (kind == "sgap") {
    sgap_from_json(j);
  } else if (kind == "bf") {
    bf_from_json(j);
  } else if (kind == "entropy") {
    validate_entropy(j);
  } else if (kind == "verdict") {
    validate_verdict(j);
  } else if (kind == "classification") {
    allow_keys(j, {"type", "bound"}, "");
    std::string t = string_value(field(j, "type", ""), "/type");
    if (t != "finite_type" && t != "strictly_sofic" && t != "non_sofic" && t != "not_eventually_periodic_up_to_bound") {
      fail("/type", "unknown type \"" + t + "\"");
    }
    if (j.contains("bound")) gap_value(j["bound"], "/bound");
  } else if (kind == "decision") {
    allow_keys(j, {"flow_equivalent", "reason"}, "");
    const Json& f = field(j, "flow_equivalent", "");
    if (!f.is_boolean() && !(f.is_string() && f.get<std::string>() == "undecided")) {
      fail("/flow_equivalent", "expected a boolean or \"undecided\"");
    }
    if (j.contains("reason")) string_value(j["reason"], "/reason");
  } else if (kind == "language") {
    allow_keys(j, {"n", "count", "words"}, "");
    gap_value(field(j, "n", ""), "/n");
    Integer count = integer_value(field(j, "count", ""), "/count");
    const Json& w = array_field(j, "words", "");
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_string() && !w[i].is_array()) fail(at("/words", i), "expected a word");
    if (count != static_cast<unsigned long>(w.size())) fail("/count", "does not match the number of words");
  } else if (kind == "word_image") {
    allow_keys(j, {"word", "image", "deciding", "deciding_bound", "stages"}, "");
    field(j, "word", "");
    field(j, "image", "");
    if (!field(j, "deciding", "").is_boolean()) fail("/deciding", "expected a boolean");
    if (j.contains("stages") && !j["stages"].is_array()) fail("/stages", "expected an array");
  } else if (kind == "validation") {
    allow_keys(j, {"valid", "kind"}, "");
    if (!field(j, "valid", "").is_boolean()) fail("/valid", "expected a boolean");
  } else {
    fail("", "unrecognised document kind \"" + kind + "\"");
  }
  return kind;
}

}  // namespace symdyn
