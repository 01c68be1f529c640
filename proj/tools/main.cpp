// Command-line front end. Talks to the library only through thetapos.h.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetapos.h"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibError : std::runtime_error {
  tp_status status;
  LibError(tp_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(tp_status st) {
  if (st != TP_OK) throw LibError(st, tp_last_error());
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using MatrixPtr = std::unique_ptr<tp_matrix, Deleter<tp_matrix, tp_matrix_free>>;
using ParamsPtr = std::unique_ptr<tp_params, Deleter<tp_params, tp_params_free>>;
using B2Ptr = std::unique_ptr<tp_b2params, Deleter<tp_b2params, tp_b2params_free>>;

json take_json(char* s) {
  if (s == nullptr) return nullptr;
  json j = json::parse(s);
  tp_string_free(s);
  return j;
}

json to_json(const tp_matrix* m) {
  char* s = nullptr;
  check(tp_matrix_to_json(m, &s));
  return take_json(s);
}

json to_json(const tp_params* p) {
  char* s = nullptr;
  check(tp_params_to_json(p, &s));
  return take_json(s);
}

json to_json(const tp_b2params* p) {
  char* s = nullptr;
  check(tp_b2params_to_json(p, &s));
  return take_json(s);
}

const json& field(const json& doc, const std::string& key) {
  if (!doc.is_object()) throw InputError("input: expected a JSON object");
  if (!doc.contains(key)) throw InputError(key + ": missing");
  return doc.at(key);
}

MatrixPtr matrix_field(const json& doc, const std::string& key, json& echo) {
  tp_matrix* m = nullptr;
  check(tp_matrix_from_json(field(doc, key).dump().c_str(), key.c_str(), &m));
  MatrixPtr out(m);
  echo[key] = to_json(out.get());
  return out;
}

ParamsPtr params_from(const json& j, const std::string& name) {
  tp_params* p = nullptr;
  check(tp_params_from_json(j.dump().c_str(), name.c_str(), &p));
  return ParamsPtr(p);
}

B2Ptr b2_from(const json& j, const std::string& name) {
  tp_b2params* p = nullptr;
  check(tp_b2params_from_json(j.dump().c_str(), name.c_str(), &p));
  return B2Ptr(p);
}

int int_field(const json& doc, const std::string& key, std::optional<int> fallback = {}) {
  if (!doc.is_object() || !doc.contains(key)) {
    if (fallback) return *fallback;
    throw InputError(key + ": missing");
  }
  const json& j = doc.at(key);
  if (!j.is_number_integer()) throw InputError(key + ": expected an integer");
  return j.get<int>();
}

std::string scalar_text(const json& j, const std::string& key) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (!j.is_string()) throw InputError(key + ": expected a rational string \"p/q\"");
  return j.get<std::string>();
}

std::vector<int> word_field(const json& j, const std::string& key) {
  if (!j.is_array()) throw InputError(key + ": expected an array of generator indices");
  std::vector<int> w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw InputError(key + "[" + std::to_string(i) + "]: expected an integer");
    w.push_back(j[i].get<int>());
  }
  return w;
}

// "121" or "1,2,1"
std::vector<int> parse_word_text(const std::string& text, const std::string& key) {
  std::vector<int> w;
  const bool commas = text.find(',') != std::string::npos;
  std::stringstream ss(text);
  std::string tok;
  if (commas) {
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw InputError(key + ": bad letter '" + tok + "'");
      w.push_back(std::stoi(tok));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InputError(key + ": bad letter '" + std::string(1, c) + "'");
      w.push_back(c - '0');
    }
  }
  if (w.empty()) throw InputError(key + ": empty word");
  return w;
}

json split_values(const std::string& text) {
  json out = json::array();
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

std::string render_word(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::size_t default_n(const std::vector<int>& w) {
  int m = 1;
  for (int x : w) m = std::max(m, x);
  return static_cast<std::size_t>(m) + 1;
}

struct Outcome {
  json report;
  int exit_code;
  std::string summary;
};

Outcome verdict(json report, bool v, const std::string& summary) {
  report["verdict"] = v;
  return {std::move(report), v ? kExitTrue : kExitFalse, summary};
}

struct Options {
  std::string input;
  std::string data;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

json read_document(const Options& o) {
  std::string text;
  if (!o.data.empty()) {
    text = o.data;
  } else if (o.input.empty() || o.input == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.input);
    if (!f) throw InputError("input: cannot open " + o.input);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("input: malformed JSON: ") + e.what());
  }
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("THETA_POS_SEED")) {
    const std::string s = env;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("THETA_POS_SEED: expected a non-negative integer");
    try {
      return std::stoull(s);
    } catch (const std::out_of_range&) {
      throw InputError("THETA_POS_SEED: out of range");
    }
  }
  return 0;
}

// ---- subcommands ----

Outcome cmd_check_tp(const json& doc) {
  json echo;
  const json src = doc.is_object() && doc.contains("matrix") ? doc : json{{"matrix", doc}};
  MatrixPtr m = matrix_field(src, "matrix", echo);
  int v = 0;
  char* witness = nullptr;
  check(tp_is_totally_positive(m.get(), &v, &witness));
  json r{{"command", "check-tp"}, {"input", echo}};
  if (!v) r["counterexample"] = {{"matrix", echo["matrix"]}, {"minor", take_json(witness)}};
  return verdict(r, v, v ? "totally positive" : "not totally positive: a minor is <= 0");
}

Outcome cmd_factor(const json& doc) {
  json echo;
  const json src = doc.is_object() && doc.contains("matrix") ? doc : json{{"matrix", doc}};
  MatrixPtr m = matrix_field(src, "matrix", echo);
  json r{{"command", "factor"}, {"input", echo}};
  char* f = nullptr;
  const tp_status st = tp_whitney_factor(m.get(), &f);
  if (st == TP_ERR_DECOMPOSITION) {
    r["counterexample"] = {{"matrix", echo["matrix"]}, {"reason", tp_last_error()}};
    return verdict(r, false, std::string("no factorization: ") + tp_last_error());
  }
  check(st);
  r["factors"] = take_json(f);
  return verdict(r, true, "g = lower * diag * upper");
}

Outcome cmd_param(const json& doc, int mirrored) {
  ParamsPtr p = params_from(doc.contains("params") ? doc["params"] : doc, "params");
  const json pj = to_json(p.get());
  const std::size_t n =
      static_cast<std::size_t>(int_field(doc, "n", static_cast<int>(default_n(pj["word"]))));
  tp_matrix* out = nullptr;
  check(tp_param_F(p.get(), n, mirrored, &out));
  MatrixPtr u(out);
  int v = 0;
  char* witness = nullptr;
  check(tp_is_unipotent_positive(u.get(), mirrored, &v, &witness));
  json r{{"command", "param"},
         {"input", {{"params", pj}, {"n", n}, {"mirrored", mirrored != 0}}},
         {"matrix", to_json(u.get())}};
  if (!v)
    r["counterexample"] = {{"params", pj}, {"minor", take_json(witness)}};
  else
    tp_string_free(witness);
  return verdict(r, v, v ? "F_w lies in the positive cone" : "F_w is not in the cone");
}

Outcome cmd_transition(const json& doc, int mirrored) {
  ParamsPtr p = params_from(field(doc, "params"), "params");
  const json pj = to_json(p.get());
  const std::vector<int> target = word_field(field(doc, "target"), "target");
  const std::size_t n =
      static_cast<std::size_t>(int_field(doc, "n", static_cast<int>(default_n(pj["word"]))));
  tp_params* out = nullptr;
  check(tp_word_transition(p.get(), target.data(), target.size(), n, mirrored, &out));
  ParamsPtr q(out);
  tp_matrix* a = nullptr;
  tp_matrix* b = nullptr;
  check(tp_param_F(p.get(), n, mirrored, &a));
  MatrixPtr ma(a);
  check(tp_param_F(q.get(), n, mirrored, &b));
  MatrixPtr mb(b);
  const json qj = to_json(q.get());
  const bool same = to_json(ma.get()) == to_json(mb.get());
  json r{{"command", "transition"},
         {"input", {{"params", pj}, {"target", target}, {"n", n}, {"mirrored", mirrored != 0}}},
         {"params", qj}};
  if (!same)
    r["counterexample"] = {{"params", pj}, {"target", target},
                           {"lhs", to_json(ma.get())}, {"rhs", to_json(mb.get())}};
  std::string vals;
  for (const auto& x : qj["values"]) vals += (vals.empty() ? "" : ", ") + x.get<std::string>();
  return verdict(r, same, render_word(pj["word"]) + " -> " + render_word(target) + ": " + vals);
}

int orientation_field(const json& doc) {
  if (!doc.contains("orientation")) return 0;
  const json& o = doc["orientation"];
  if (o == "GL") return 0;
  if (o == "SL") return 1;
  throw InputError("orientation: expected \"GL\" or \"SL\"");
}

Outcome cmd_triple(const json& doc) {
  json echo;
  MatrixPtr t = matrix_field(doc, "t", echo);
  json r{{"command", "triple"}};
  int v = 0;
  if (!doc.contains("f1") && !doc.contains("f3")) {
    tp_matrix* coord = nullptr;
    check(tp_flag_triple_standard(t.get(), &v, &coord));
    MatrixPtr c(coord);
    echo["standard"] = true;
    r["input"] = echo;
    r["coordinate"] = to_json(c.get());
    if (!v) r["counterexample"] = {{"t", echo["t"]}, {"coordinate", r["coordinate"]}};
    return verdict(r, v, v ? "(E, t, F) is positive" : "(E, t, F) is not positive");
  }
  MatrixPtr f1 = matrix_field(doc, "f1", echo);
  MatrixPtr f3 = matrix_field(doc, "f3", echo);
  const int o = orientation_field(doc);
  echo["orientation"] = o == 0 ? "GL" : "SL";
  char* cert = nullptr;
  check(tp_flag_triple(f1.get(), t.get(), f3.get(), o, &v, &cert));
  r["input"] = echo;
  if (v)
    r["certificate"] = take_json(cert);
  else
    r["counterexample"] = echo;
  return verdict(r, v, v ? "triple is positive" : "triple is not positive");
}

Outcome cmd_quadruple(const json& doc) {
  json echo;
  MatrixPtr f1 = matrix_field(doc, "f1", echo);
  MatrixPtr s = matrix_field(doc, "s", echo);
  MatrixPtr s2 = matrix_field(doc, "s2", echo);
  MatrixPtr f4 = matrix_field(doc, "f4", echo);
  const int o = orientation_field(doc);
  echo["orientation"] = o == 0 ? "GL" : "SL";
  int v = 0;
  check(tp_flag_quadruple(f1.get(), s.get(), s2.get(), f4.get(), o, &v));
  json r{{"command", "quadruple"}, {"input", echo}};
  if (!v) r["counterexample"] = echo;
  return verdict(r, v, v ? "quadruple is positive" : "quadruple is not positive");
}

Outcome cmd_maslov(const json& doc) {
  json echo;
  MatrixPtr l1 = matrix_field(doc, "l1", echo);
  MatrixPtr l2 = matrix_field(doc, "l2", echo);
  MatrixPtr l3 = matrix_field(doc, "l3", echo);
  long index = 0;
  check(tp_maslov_index(l1.get(), l2.get(), l3.get(), &index));
  std::size_t rows = 0, cols = 0;
  check(tp_matrix_dims(l1.get(), &rows, &cols));
  json r{{"command", "maslov"}, {"input", echo}, {"index", index}, {"n", cols},
         {"maximal", index == static_cast<long>(cols)}};
  // The index is a computation, not a predicate: success always exits 0.
  return {r, kExitTrue, "maslov index " + std::to_string(index) + " (n = " + std::to_string(cols) + ")"};
}

Outcome cmd_lag_triple(const json& doc) {
  json echo;
  MatrixPtr l1 = matrix_field(doc, "l1", echo);
  MatrixPtr l2 = matrix_field(doc, "l2", echo);
  MatrixPtr l3 = matrix_field(doc, "l3", echo);
  int v = 0;
  check(tp_lag_triple(l1.get(), l2.get(), l3.get(), &v));
  long index = 0;
  check(tp_maslov_index(l1.get(), l2.get(), l3.get(), &index));
  json r{{"command", "lag-triple"}, {"input", echo}, {"maslov_index", index}};
  if (!v) r["counterexample"] = echo;
  return verdict(r, v, v ? "Lagrangian triple is positive" : "Lagrangian triple is not positive");
}

Outcome cmd_so3q_braid(const json& doc) {
  const int q = int_field(doc, "q");
  B2Ptr p = b2_from(field(doc, "params"), "params");
  const json pj = to_json(p.get());
  tp_b2params* out = nullptr;
  check(tp_so3q_braid(q, p.get(), &out));
  B2Ptr t(out);
  tp_matrix* a = nullptr;
  tp_matrix* b = nullptr;
  check(tp_so3q_F(q, p.get(), &a));
  MatrixPtr ma(a);
  check(tp_so3q_F(q, t.get(), &b));
  MatrixPtr mb(b);
  const bool same = to_json(ma.get()) == to_json(mb.get());
  json r{{"command", "so3q braid"}, {"input", {{"q", q}, {"params", pj}}}, {"params", to_json(t.get())}};
  if (!same) r["counterexample"] = {{"q", q}, {"params", pj}};
  return verdict(r, same, same ? "F_1212(p) = F_2121(braid(p))" : "braid identity failed");
}

Outcome cmd_so3q_invert(const json& doc) {
  const int q = int_field(doc, "q");
  const std::vector<int> word = word_field(doc.contains("word") ? doc["word"] : json{1, 2, 1, 2}, "word");
  json echo{{"q", q}, {"word", word}};
  MatrixPtr u;
  if (doc.contains("params")) {
    B2Ptr p = b2_from(doc["params"], "params");
    echo["params"] = to_json(p.get());
    tp_matrix* m = nullptr;
    check(tp_so3q_F(q, p.get(), &m));
    u.reset(m);
  } else {
    u = matrix_field(doc, "matrix", echo);
  }
  int v = 0;
  tp_b2params* out = nullptr;
  check(tp_so3q_invert(q, u.get(), word.data(), word.size(), &v, &out));
  B2Ptr res(out);
  json r{{"command", "so3q invert"}, {"input", echo}};
  if (v)
    r["params"] = to_json(res.get());
  else
    r["counterexample"] = {{"q", q}, {"word", word}, {"matrix", to_json(u.get())}};
  return verdict(r, v, v ? "element is Theta-positive" : "NotPositive");
}

Outcome cmd_so3q_exp(const json& doc) {
  const int q = int_field(doc, "q");
  const std::string a = scalar_text(field(doc, "a"), "a");
  const std::string w = field(doc, "w").dump();
  tp_matrix* m = nullptr;
  check(tp_so3q_exp(q, a.c_str(), w.c_str(), &m));
  MatrixPtr e(m);
  json r{{"command", "so3q exp"}, {"input", {{"q", q}, {"a", doc["a"]}, {"w", doc["w"]}}},
         {"matrix", to_json(e.get())}};
  int in_cone = 0;
  check(tp_so3q_in_cone(q, w.c_str(), &in_cone));
  // a has been validated by the library; positive iff unsigned with a nonzero numerator
  const std::string num = a.substr(0, a.find('/'));
  const bool a_pos = num[0] != '-' && num.find_first_not_of('0') != std::string::npos;
  if (!(in_cone && a_pos)) {
    r["identity_checked"] = false;
    return verdict(r, true, "exp computed (a <= 0 or w outside the cone: identity not asserted)");
  }
  tp_b2params* p = nullptr;
  check(tp_so3q_exp_params(q, a.c_str(), w.c_str(), &p));
  B2Ptr params(p);
  tp_matrix* f = nullptr;
  check(tp_so3q_F(q, params.get(), &f));
  MatrixPtr fm(f);
  const bool same = to_json(fm.get()) == r["matrix"];
  r["identity_checked"] = true;
  r["params"] = to_json(params.get());
  if (!same) r["counterexample"] = r["input"];
  return verdict(r, same, same ? "exp(a + w) = F_2121(w/3, 3a/4, 2w/3, a/4)" : "exp identity failed");
}

Outcome cmd_so3q_triple(const json& doc) {
  const int q = int_field(doc, "q");
  json echo{{"q", q}};
  MatrixPtr f = matrix_field(doc, "flag", echo);
  int v = 0;
  tp_matrix* c = nullptr;
  check(tp_so3q_triple(q, f.get(), &v, &c));
  MatrixPtr coord(c);
  json r{{"command", "so3q triple"}, {"input", echo}, {"coordinate", to_json(coord.get())}};
  if (!v) r["counterexample"] = {{"q", q}, {"flag", echo["flag"]}, {"coordinate", r["coordinate"]}};
  return verdict(r, v, v ? "(E, S, F) is Theta-positive" : "(E, S, F) is not Theta-positive");
}

Outcome cmd_sample(const std::string& kind, std::size_t size, std::size_t count, std::uint64_t seed) {
  char* out = nullptr;
  check(tp_sample(kind.c_str(), size, seed, count, &out));
  json r{{"command", "sample"},
         {"input", {{"kind", kind}, {"size", size}, {"count", count}, {"seed", seed}}},
         {"samples", take_json(out)}};
  return {r, kExitTrue, std::to_string(count) + " " + kind + " sample(s), seed " + std::to_string(seed)};
}

Outcome cmd_selftest(std::uint64_t seed, std::size_t scale) {
  int v = 0;
  char* out = nullptr;
  check(tp_selftest(seed, scale, &v, &out));
  json rep = take_json(out);
  json r{{"command", "selftest"}, {"input", {{"seed", seed}, {"scale", scale}}}};
  r["suites"] = rep["suites"];
  std::string summary;
  for (const auto& s : rep["suites"])
    summary += s["suite"].get<std::string>() + ": " + std::to_string(s["passed"].get<std::size_t>()) +
               "/" + std::to_string(s["trials"].get<std::size_t>()) + " " +
               s["status"].get<std::string>() + "\n";
  return verdict(r, v, summary + (v ? "selftest PASS" : "selftest FAIL"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact positivity checks for GL(n), Sp(2n) and SO(3,q)"};
  app.require_subcommand(1);
  Options opt;
  std::string command;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", opt.input, "JSON input file ('-' for stdin)");
    sub->add_option("-d,--data", opt.data, "inline JSON input");
    sub->add_flag("--timing", opt.timing, "add wall-clock timing to the report");
  };

  auto* check_tp = app.add_subcommand("check-tp", "total positivity of a matrix");
  auto* factor = app.add_subcommand("factor", "Whitney factorization lower * diag * upper");
  auto* param = app.add_subcommand("param", "evaluate F_w on positive parameters");
  auto* transition = app.add_subcommand("transition", "change of coordinates between reduced words");
  auto* triple = app.add_subcommand("triple", "positivity of a triple of flags");
  auto* quadruple = app.add_subcommand("quadruple", "positivity of a quadruple of flags");
  auto* maslov = app.add_subcommand("maslov", "Maslov index of three Lagrangians");
  auto* lag_triple = app.add_subcommand("lag-triple", "positivity of a Lagrangian triple");
  auto* so3q = app.add_subcommand("so3q", "Theta-positivity in SO(3,q)");
  so3q->require_subcommand(1);
  auto* braid = so3q->add_subcommand("braid", "transition (1,2,1,2) -> (2,1,2,1)");
  auto* invert = so3q->add_subcommand("invert", "recover positive parameters of an element");
  auto* expc = so3q->add_subcommand("exp", "exponential of a + w");
  auto* so3q_triple = so3q->add_subcommand("triple", "Theta-positivity of (E, S, F)");
  auto* sample = app.add_subcommand("sample", "random positive elements");
  auto* selftest = app.add_subcommand("selftest", "run every invariant suite");

  for (auto* s : {check_tp, factor, param, transition, triple, quadruple, maslov, lag_triple, braid,
                  invert, expc, so3q_triple})
    add_io(s);

  bool mirrored = false;
  std::string word_text, to_text, values_text;
  std::optional<int> n_opt;
  param->add_option("--word", word_text, "reduced word, e.g. 121 or 1,2,1");
  param->add_option("--values", values_text, "comma-separated parameters");
  param->add_option("--n", n_opt, "matrix size");
  param->add_flag("--mirrored", mirrored, "use the negated cone");
  transition->add_option("--from,--word", word_text, "source reduced word");
  transition->add_option("--to", to_text, "target reduced word");
  transition->add_option("--values", values_text, "comma-separated parameters");
  transition->add_option("--n", n_opt, "matrix size");
  transition->add_flag("--mirrored", mirrored, "use the negated cone");

  std::string kind = "tp";
  std::size_t size = 3, count = 1, scale = 1;
  std::uint64_t seed_value = 0;
  auto* seed_opt1 = sample->add_option("--seed", seed_value, "PRNG seed (mt19937_64)");
  sample->add_option("--kind", kind, "tp|unipotent|params|symplectic|lagrangian|cone|b2");
  sample->add_option("--size", size, "n, or q for cone/b2");
  sample->add_option("--count", count, "number of samples");
  sample->add_flag("--timing", opt.timing);
  auto* seed_opt2 = selftest->add_option("--seed", seed_value, "PRNG seed (mt19937_64)");
  selftest->add_option("--scale", scale, "trial-count multiplier")->check(CLI::Range(1, 1000));
  selftest->add_flag("--timing", opt.timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kExitInput;
  }
  if (seed_opt1->count() + seed_opt2->count() > 0) opt.seed = seed_value;

  const auto start = std::chrono::steady_clock::now();
  std::string name;
  Outcome out;
  try {
    auto doc_with_flags = [&]() -> json {
      // param/transition accept flags in place of a document.
      if (!word_text.empty() || !values_text.empty()) {
        if (word_text.empty()) throw InputError("word: missing");
        if (values_text.empty()) throw InputError("values: missing");
        json d{{"params", {{"word", parse_word_text(word_text, "word")}, {"values", split_values(values_text)}}}};
        if (n_opt) d["n"] = *n_opt;
        if (!to_text.empty()) d["target"] = parse_word_text(to_text, "target");
        return d;
      }
      return read_document(opt);
    };
    if (check_tp->parsed()) {
      name = "check-tp";
      out = cmd_check_tp(read_document(opt));
    } else if (factor->parsed()) {
      name = "factor";
      out = cmd_factor(read_document(opt));
    } else if (param->parsed()) {
      name = "param";
      out = cmd_param(doc_with_flags(), mirrored ? 1 : 0);
    } else if (transition->parsed()) {
      name = "transition";
      out = cmd_transition(doc_with_flags(), mirrored ? 1 : 0);
    } else if (triple->parsed()) {
      name = "triple";
      out = cmd_triple(read_document(opt));
    } else if (quadruple->parsed()) {
      name = "quadruple";
      out = cmd_quadruple(read_document(opt));
    } else if (maslov->parsed()) {
      name = "maslov";
      out = cmd_maslov(read_document(opt));
    } else if (lag_triple->parsed()) {
      name = "lag-triple";
      out = cmd_lag_triple(read_document(opt));
    } else if (braid->parsed()) {
      name = "so3q braid";
      out = cmd_so3q_braid(read_document(opt));
    } else if (invert->parsed()) {
      name = "so3q invert";
      out = cmd_so3q_invert(read_document(opt));
    } else if (expc->parsed()) {
      name = "so3q exp";
      out = cmd_so3q_exp(read_document(opt));
    } else if (so3q_triple->parsed()) {
      name = "so3q triple";
      out = cmd_so3q_triple(read_document(opt));
    } else if (sample->parsed()) {
      name = "sample";
      out = cmd_sample(kind, size, count, resolve_seed(opt));
    } else if (selftest->parsed()) {
      name = "selftest";
      out = cmd_selftest(resolve_seed(opt), scale);
    }
  } catch (const InputError& e) {
    std::cout << json{{"command", name}, {"error", {{"kind", "parse"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    std::cerr << name << ": input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LibError& e) {
    std::cout << json{{"command", name},
                      {"error", {{"kind", tp_status_name(e.status)}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    std::cerr << name << ": " << tp_status_name(e.status) << " error: " << e.what() << "\n";
    return kExitInput;
  }
  if (opt.timing) {
    out.report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << out.report.dump(2) << "\n";
  std::cerr << name << ": " << out.summary << "\n";
  return out.exit_code;
}
