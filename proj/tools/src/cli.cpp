#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "symdyn/entropy.hpp"
#include "symdyn/error.hpp"
#include "symdyn/invariants.hpp"
#include "symdyn/json_io.hpp"
#include "symdyn/moves.hpp"
#include "symdyn/presentation.hpp"
#include "symdyn/sgap.hpp"

namespace symdyn::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kBounded = 3;

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

IntMatrix nonnegative_square(const IntMatrix& m) {
  if (!m.is_square()) throw InputError("matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) {
        throw InputError("at /" + std::to_string(i) + "/" + std::to_string(j) + ": negative entry " + m(i, j).get_str());
      }
  return m;
}

// Adjacency matrix of a matrix, graph or SFT document.
IntMatrix matrix_of(const Json& j) {
  std::string kind = detect_kind(j);
  if (kind == "matrix") return nonnegative_square(matrix_from_json(j));
  if (kind == "graph") return adjacency(graph_from_json(j));
  if (kind == "sft") return adjacency(sft_to_edge_shift(sft_from_json(j)).graph);
  throw InputError("expected a matrix, graph or SFT document");
}

Graph graph_of(const Json& j) {
  std::string kind = detect_kind(j);
  if (kind == "matrix") return graph_from_adjacency(nonnegative_square(matrix_from_json(j)));
  if (kind == "graph") return graph_from_json(j);
  throw InputError("expected a matrix or graph document");
}

// Every edge labeled by its own id, so words are paths.
LabeledGraph edge_labeled(const Graph& g) {
  LabeledGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v);
  for (const auto& e : g.edges()) out.add_edge(e.from, e.to, "e" + std::to_string(e.id));
  return out;
}

Json edge_shift_json(const EdgeShift& es) {
  Json j = graph_to_json(es.graph);
  j["adjacency"] = matrix_to_json(adjacency(es.graph));
  return j;
}

Json stage_json(const Stage& s) {
  Json j;
  j["move"] = s.move.str();
  j["alphabet"] = s.result.alphabet().symbols();
  Json f = Json::array();
  for (const auto& w : s.result.forbidden()) f.push_back(word_to_json(w));
  j["forbidden"] = f;
  return j;
}

struct Options {
  std::vector<std::string> inputs;
  std::string method;
  std::optional<std::size_t> n;
  std::size_t scale = 1;
  std::size_t target = 1;
  std::string a, b;
  std::string source;
  std::string word;
  bool trace = false;
  bool periodic = false;
  long bound = 0;
  std::string kind = "auto";
};

int emit(std::ostream& out, const Json& j, int code = kOk) {
  out << j.dump() << "\n";
  return code;
}

int cmd_bf(const Options& o, std::ostream& out) {
  return emit(out, bf_to_json(bowen_franks(matrix_of(load_json(o.inputs[0])))));
}

int cmd_fe_decide(const Options& o, std::ostream& out) {
  IntMatrix a = matrix_of(load_json(o.inputs[0]));
  IntMatrix b = matrix_of(load_json(o.inputs[1]));
  Json j;
  try {
    j["flow_equivalent"] = franks_decide(a, b);
  } catch (const PreconditionError& e) {
    j["flow_equivalent"] = "undecided";
    j["reason"] = e.what();
    return emit(out, j, kBounded);
  }
  return emit(out, j);
}

int cmd_language(const Options& o, std::ostream& out) {
  ForbiddenSetSFT sft = sft_from_json(load_json(o.inputs[0]));
  auto words = enumerate_language(sft, *o.n);
  Json j;
  j["n"] = *o.n;
  j["count"] = words.size();
  Json arr = Json::array();
  for (const auto& w : words) arr.push_back(word_to_json(w));
  j["words"] = arr;
  return emit(out, j);
}

int cmd_edge_shift(const Options& o, std::ostream& out) {
  return emit(out, edge_shift_json(sft_to_edge_shift(sft_from_json(load_json(o.inputs[0])))));
}

int cmd_minimize(const Options& o, std::ostream& out) {
  Graph g = graph_from_json(load_json(o.inputs[0]));
  if (!g.labeled()) throw InputError("a labeled graph is required");
  return emit(out, graph_to_json(minimal_right_resolving(g)));
}

int cmd_entropy(const Options& o, std::ostream& out) {
  Json in = load_json(o.inputs[0]);
  std::string kind = detect_kind(in);
  EntropyEstimate e;
  if (o.method == "wordcount") {
    if (!o.n || *o.n == 0) throw InputError("--n N with N >= 1 is required for wordcount");
    if (kind == "sft") {
      e = entropy_word_count(sft_from_json(in), *o.n);
    } else {
      Graph g = graph_of(in);
      e = entropy_word_count(g.labeled() ? g : edge_labeled(g), *o.n);
    }
  } else {
    if (kind == "sft") {
      e = perron_entropy(sft_to_edge_shift(sft_from_json(in)).graph);
    } else {
      Graph g = graph_of(in);
      e = g.labeled() ? sofic_entropy(g) : perron_entropy(g);
    }
  }
  return emit(out, entropy_to_json(e));
}

int cmd_scale(const Options& o, std::ostream& out) {
  Graph g = graph_of(load_json(o.inputs[0]));
  return emit(out, graph_to_json(scale_entropy_construction(g, o.scale)));
}

int cmd_boost(const Options& o, std::ostream& out) {
  ForbiddenSetSFT sft = sft_from_json(load_json(o.inputs[0]));
  if (sft.alphabet().size() < 2 && (o.a.empty() || o.b.empty())) throw InputError("the alphabet needs two symbols");
  Symbol a = o.a.empty() ? sft.alphabet()[0] : o.a;
  Symbol b = o.b.empty() ? sft.alphabet()[1] : o.b;
  Boost boost = boost_entropy_construction(sft, a, b, o.target);
  Json j = sft_to_json(boost.result());
  Json contracted;
  for (const auto& spec : boost.pipeline.specs()) contracted[spec.other] = word_to_json(spec.word);
  j["contracted"] = contracted;
  return emit(out, j);
}

int cmd_moves(const Options& o, std::ostream& out) {
  std::optional<ForbiddenSetSFT> source;
  if (!o.source.empty()) source = sft_from_json(load_json(o.source));
  MovePipeline p = pipeline_from_json(load_json(o.inputs[0]), source ? &*source : nullptr);
  const Alphabet& alpha = p.source().alphabet();
  Word w = word_from_json(Json(o.word), alpha, "word");
  Json j;
  j["word"] = word_to_json(w);
  if (o.periodic) {
    PeriodicOrbit v = pipeline_apply_periodic(p, PeriodicOrbit(w));
    j["image"] = word_to_json(v.cycle());
    j["deciding"] = true;
  } else {
    Word img = pipeline_apply_word(p, w);
    j["image"] = word_to_json(img);
    j["deciding"] = !img.empty();
  }
  j["deciding_bound"] = integer_json(deciding_length_bound(p));
  if (o.trace) {
    Json stages = Json::array();
    for (const auto& s : p.stages()) stages.push_back(stage_json(s));
    j["stages"] = stages;
  }
  return emit(out, j, j["deciding"].get<bool>() ? kOk : kBounded);
}

int cmd_classify(const Options& o, std::ostream& out) {
  Classification c = classify_type(sgap_from_json(load_json(o.inputs[0])));
  return emit(out, classification_to_json(c), c.bound ? kBounded : kOk);
}

int cmd_fe_equal(const Options& o, std::ostream& out) {
  if (o.bound < 1) throw InputError("--bound must be at least 1");
  SGapSet a = sgap_from_json(load_json(o.inputs[0]));
  SGapSet b = sgap_from_json(load_json(o.inputs[1]));
  FEVerdict v = fe_equal(a, b, o.bound);
  bool bounded = v.outcome == FEVerdict::Outcome::NotEquivalentUpTo || v.outcome == FEVerdict::Outcome::UnknownUpTo;
  return emit(out, verdict_to_json(v), bounded ? kBounded : kOk);
}

int cmd_validate(const Options& o, std::ostream& out) {
  Json j;
  j["valid"] = true;
  j["kind"] = validate_document(load_json(o.inputs[0]), o.kind);
  return emit(out, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic dynamics toolkit", "symdyn"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> handler;

  o.inputs.resize(2);
  auto inputs = [&](CLI::App* cmd, std::size_t count, const std::string& what) {
    cmd->add_option("input", o.inputs[0], what)->required();
    if (count == 2) cmd->add_option("second", o.inputs[1], "Second input")->required();
  };
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&, std::ostream&)) {
    cmd->callback([&handler, fn] { handler = fn; });
  };

  auto* invariant = app.add_subcommand("invariant", "Integer invariants");
  invariant->require_subcommand(1);
  auto* bf = invariant->add_subcommand("bf", "Signed Bowen-Franks group of a matrix");
  inputs(bf, 1, "Matrix, graph or SFT (JSON text or file)");
  bind(bf, cmd_bf);

  auto* fe = app.add_subcommand("fe", "Flow equivalence");
  fe->require_subcommand(1);
  auto* decide = fe->add_subcommand("decide-sft", "Decide flow equivalence of two irreducible SFTs");
  inputs(decide, 2, "Two matrices, graphs or SFTs");
  bind(decide, cmd_fe_decide);

  auto* language = app.add_subcommand("language", "Languages of shifts of finite type");
  language->require_subcommand(1);
  auto* enumerate = language->add_subcommand("enum", "List B_n(X)");
  enumerate->add_option("--n", o.n, "Word length")->required();
  inputs(enumerate, 1, "SFT");
  bind(enumerate, cmd_language);

  auto* graph = app.add_subcommand("graph", "Graph constructions");
  graph->require_subcommand(1);
  auto* edge_shift = graph->add_subcommand("edge-shift", "Edge-shift graph of an SFT");
  inputs(edge_shift, 1, "SFT");
  bind(edge_shift, cmd_edge_shift);

  auto* presentation = app.add_subcommand("presentation", "Sofic presentations");
  presentation->require_subcommand(1);
  auto* minimize = presentation->add_subcommand("minimize", "Minimal right-resolving presentation");
  inputs(minimize, 1, "Labeled graph");
  bind(minimize, cmd_minimize);

  auto* entropy = app.add_subcommand("entropy", "Topological entropy");
  entropy->add_option("--method", o.method, "wordcount or perron")
      ->required()
      ->check(CLI::IsMember({"wordcount", "perron"}));
  entropy->add_option("--n", o.n, "Word length for wordcount");
  inputs(entropy, 1, "Matrix, graph or SFT");
  bind(entropy, cmd_entropy);

  auto* construct = app.add_subcommand("construct", "Flow-equivalent constructions");
  construct->require_subcommand(1);
  auto* scale = construct->add_subcommand("scale", "Divide the entropy by n");
  scale->add_option("--n", o.scale, "Factor")->required()->check(CLI::PositiveNumber);
  inputs(scale, 1, "Matrix or graph");
  bind(scale, cmd_scale);
  auto* boost = construct->add_subcommand("boost", "Raise the entropy to at least N");
  boost->add_option("--target", o.target, "N")->required();
  boost->add_option("--a", o.a, "Symbol a (default: first)");
  boost->add_option("--b", o.b, "Symbol b (default: second)");
  inputs(boost, 1, "SFT");
  bind(boost, cmd_boost);

  auto* moves = app.add_subcommand("moves", "Move pipelines");
  moves->require_subcommand(1);
  auto* apply = moves->add_subcommand("apply", "Image of a word under a pipeline");
  apply->add_option("pipeline", o.inputs[0], "Pipeline")->required();
  apply->add_option("word", o.word, "Word over the source alphabet")->required();
  apply->add_option("--source", o.source, "Source SFT when the pipeline has none");
  apply->add_flag("--trace", o.trace, "Include every stage's forbidden set");
  apply->add_flag("--periodic", o.periodic, "Treat the word as the cycle of a periodic point");
  bind(apply, cmd_moves);

  auto* sgap = app.add_subcommand("sgap", "S-gap shifts");
  sgap->require_subcommand(1);
  auto* classify = sgap->add_subcommand("classify", "Finite type, strictly sofic or non-sofic");
  inputs(classify, 1, "Gap set");
  bind(classify, cmd_classify);
  auto* fe_equal_cmd = sgap->add_subcommand("fe-equal", "Flow equivalence of two S-gap shifts");
  fe_equal_cmd->add_option("--bound", o.bound, "Search bound")->required();
  inputs(fe_equal_cmd, 2, "Two gap sets");
  bind(fe_equal_cmd, cmd_fe_equal);

  auto* validate = app.add_subcommand("validate", "Check a JSON document");
  validate->add_option("--kind", o.kind, "Expected kind (default: auto)");
  inputs(validate, 1, "Document");
  bind(validate, cmd_validate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }
  if (!handler) {
    err << app.help();
    return kInputError;
  }
  try {
    return handler(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace symdyn::cli
