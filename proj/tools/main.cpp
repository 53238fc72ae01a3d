// Command-line front end: enumeration, networks, weight matrices, Plücker
// coordinates, chip factorizations, verification suites, component
// identification, necklaces, point counts, and R-polynomials.
//
// Exit codes: 0 success, 1 input error (bad flags, malformed files,
// non-prime modulus, zero a-weight), 2 verification failure.
#include "deodhar/strata.hpp"
#include "deodhar/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace deodhar;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_inline(const std::string& text) {
  if (text.empty()) return false;
  return text.find_first_not_of("*+o/") == std::string::npos;
}

// Inline syntax like "*+/+o" or a path to a diagram JSON file.  For inline
// text the ambient Grassmannian defaults to the tight rectangle.
GoDiagram load_diagram(const std::string& arg, std::optional<int> k, std::optional<int> n) {
  if (looks_inline(arg)) {
    std::vector<std::string> rows;
    std::string current;
    for (char c : arg) {
      if (c == '/') {
        rows.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    rows.push_back(current);
    int kk = k ? *k : static_cast<int>(rows.size());
    int nn = n ? *n : kk + static_cast<int>(rows.front().size());
    return diagram_from_text(arg, kk, nn);
  }
  return diagram_from_json_string(read_file(arg));
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(what);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse " + what + ": \"" + text + "\"");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + " is empty");
  return out;
}

struct FieldChoice {
  bool rational = false;
  bool laurent = false;
  std::int64_t p = 0;  // set when a prime modulus was chosen
};

FieldChoice parse_field(const std::string& text, bool allow_laurent) {
  FieldChoice f;
  if (text == "rational") {
    f.rational = true;
    return f;
  }
  if (text == "laurent") {
    if (!allow_laurent)
      throw std::invalid_argument("this command needs a field; use rational or a prime");
    f.laurent = true;
    return f;
  }
  try {
    std::size_t used = 0;
    f.p = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown field \"" + text + "\"; use rational or a prime");
  }
  if (!is_prime(f.p)) throw std::invalid_argument("field modulus " + text + " is not prime");
  return f;
}

// "a2=3,c4=5" into variable assignments; a-weights must stay invertible.
template <class S>
std::map<Variable, S> parse_assignments(const std::string& text, S (*parse)(const std::string&),
                                        const std::int64_t* modulus) {
  std::map<Variable, S> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq < 2)
      throw std::invalid_argument("bad assignment \"" + tok + "\"; expected name=value");
    char kind = tok[0];
    if (kind != 'a' && kind != 'c')
      throw std::invalid_argument("weights are a- or c-variables, got \"" + tok + "\"");
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(tok.substr(1, eq - 1), &used);
      if (used != eq - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad variable in assignment \"" + tok + "\"");
    }
    std::string value = tok.substr(eq + 1);
    S parsed = modulus ? parse(value + " mod " + std::to_string(*modulus)) : parse(value);
    if (kind == 'a' && scalar_is_zero(parsed))
      throw std::invalid_argument("a-variable " + tok.substr(0, eq) + " must be nonzero");
    out.emplace(Variable(kind, index), parsed);
  }
  return out;
}

template <class S>
Matrix<S> evaluate_matrix(const Matrix<LaurentPolynomial>& sym, const std::map<Variable, S>& vals,
                          const S& one) {
  Matrix<S> m(sym.rows(), sym.cols(), one - one);
  for (int r = 0; r < sym.rows(); ++r)
    for (int c = 0; c < sym.cols(); ++c) m.at(r, c) = evaluate(sym.at(r, c), vals, one);
  m.row_labels = sym.row_labels;
  return m;
}

template <class S>
int print_identification(const PluckerVector<S>& p) {
  Identification<S> id = identify(p);
  std::ostringstream out;
  out << "{\"diagram\": " << to_json_string(id.diagram) << ", \"weights\": {";
  bool first = true;
  for (const auto& [var, val] : id.weights) {
    out << (first ? "" : ", ") << '"' << var.name() << "\": \"" << scalar_to_string(val) << '"';
    first = false;
  }
  out << "}}";
  std::cout << out.str() << "\n";
  return 0;
}

template <class S>
int print_plucker(const PluckerVector<S>& p, const std::string& subset) {
  if (subset.empty()) {
    std::cout << to_json_string(p) << "\n";
    return 0;
  }
  Subset i = parse_subset_key(subset);
  if (static_cast<int>(i.size()) != p.k)
    throw std::invalid_argument("subset size must be k = " + std::to_string(p.k));
  auto it = p.coords.find(i);
  if (it == p.coords.end())
    std::cout << "0\n";
  else
    std::cout << scalar_to_string(it->second) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network parameterizations of Deodhar components of the Grassmannian"};
  app.require_subcommand(1);

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "List the Go-diagrams of Gr(k,n)");
  int en_k = 0, en_n = 0;
  std::string en_shape;
  bool en_le = false;
  cmd_enum->add_option("--k", en_k, "rank")->required();
  cmd_enum->add_option("--n", en_n, "ambient dimension")->required();
  cmd_enum->add_option("--shape", en_shape, "restrict to one shape, row lengths like 4,4,3");
  cmd_enum->add_flag("--le-only", en_le, "only Le-diagrams");

  // network
  auto* cmd_net = app.add_subcommand("network", "Weighted network of a diagram");
  std::string net_diagram, net_format = "dot";
  std::optional<int> net_k, net_n;
  cmd_net->add_option("--diagram", net_diagram, "diagram file or inline text")->required();
  cmd_net->add_option("--k", net_k, "rank for inline diagrams");
  cmd_net->add_option("--n", net_n, "ambient dimension for inline diagrams");
  cmd_net->add_option("--format", net_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  // weights
  auto* cmd_w = app.add_subcommand("weights", "Weight matrix of a diagram");
  std::string w_diagram, w_eval, w_field = "rational";
  std::optional<int> w_k, w_n;
  cmd_w->add_option("--diagram", w_diagram, "diagram file or inline text")->required();
  cmd_w->add_option("--k", w_k, "rank for inline diagrams");
  cmd_w->add_option("--n", w_n, "ambient dimension for inline diagrams");
  cmd_w->add_option("--eval", w_eval, "edge weights like a2=3,c4=5");
  cmd_w->add_option("--field", w_field, "rational or a prime modulus");

  // plucker
  auto* cmd_p = app.add_subcommand("plucker", "Plücker coordinates of a diagram or matrix");
  std::string p_diagram, p_matrix, p_subset, p_field = "laurent";
  std::optional<int> p_k, p_n;
  cmd_p->add_option("--diagram", p_diagram, "diagram file or inline text");
  cmd_p->add_option("--matrix", p_matrix, "matrix JSON file");
  cmd_p->add_option("--k", p_k, "rank for inline diagrams");
  cmd_p->add_option("--n", p_n, "ambient dimension for inline diagrams");
  cmd_p->add_option("--subset", p_subset, "single coordinate, like 1,3");
  cmd_p->add_option("--field", p_field, "laurent, rational, or a prime modulus");

  // mr
  auto* cmd_mr = app.add_subcommand("mr", "Chip factorization data of a diagram");
  std::string mr_diagram, mr_show;
  std::optional<int> mr_k, mr_n;
  cmd_mr->add_option("--diagram", mr_diagram, "diagram file or inline text")->required();
  cmd_mr->add_option("--k", mr_k, "rank for inline diagrams");
  cmd_mr->add_option("--n", mr_n, "ambient dimension for inline diagrams");
  cmd_mr->add_option("--show", mr_show, "g, M, Mtilde, or L")
      ->required()
      ->check(CLI::IsMember({"g", "M", "Mtilde", "L"}));

  // verify
  auto* cmd_v = app.add_subcommand("verify", "Run a verification suite");
  std::string v_theorem;
  int v_k = 0, v_n = 0;
  bool v_exhaustive = false;
  unsigned v_seed = 0;
  int v_trials = 50;
  cmd_v->add_option("--theorem", v_theorem, "entries, row, lgv, or extremal")->required();
  cmd_v->add_option("--k", v_k, "rank")->required();
  cmd_v->add_option("--n", v_n, "ambient dimension")->required();
  cmd_v->add_flag("--exhaustive", v_exhaustive, "sweep every diagram");
  cmd_v->add_option("--seed", v_seed, "sampling seed");
  cmd_v->add_option("--trials", v_trials, "sampled diagrams when not exhaustive");

  // identify
  auto* cmd_id = app.add_subcommand("identify", "Locate the component of a point");
  std::string id_matrix, id_plucker, id_field;
  cmd_id->add_option("--matrix", id_matrix, "matrix JSON file");
  cmd_id->add_option("--plucker", id_plucker, "Plücker vector JSON file");
  cmd_id->add_option("--field", id_field, "rational or a prime modulus")->required();

  // necklace
  auto* cmd_nk = app.add_subcommand("necklace", "Grassmann necklace of a point");
  std::string nk_matrix, nk_plucker, nk_field = "rational";
  cmd_nk->add_option("--matrix", nk_matrix, "matrix JSON file");
  cmd_nk->add_option("--plucker", nk_plucker, "Plücker vector JSON file");
  cmd_nk->add_option("--field", nk_field, "laurent, rational, or a prime modulus");

  // count
  auto* cmd_c = app.add_subcommand("count", "Point counts over finite fields");
  int c_k = 0, c_n = 0;
  std::optional<std::int64_t> c_q;
  bool c_symbolic = false;
  cmd_c->add_option("--k", c_k, "rank")->required();
  cmd_c->add_option("--n", c_n, "ambient dimension")->required();
  cmd_c->add_option("--q", c_q, "field size");
  cmd_c->add_flag("--symbolic", c_symbolic, "polynomial in q");

  // rpoly
  auto* cmd_r = app.add_subcommand("rpoly", "R-polynomial of a pair (v, w)");
  std::string r_v, r_word;
  cmd_r->add_option("--v", r_v, "one-line permutation, like 1,3,2")->required();
  cmd_r->add_option("--w-word", r_word, "reduced word for w, like 1,2,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_enum->parsed()) {
      std::vector<GoDiagram> diagrams;
      if (en_shape.empty()) {
        diagrams = enumerate_diagrams(en_k, en_n);
      } else {
        Shape shape{en_k, en_n, parse_int_list(en_shape, "shape")};
        shape.validate();
        diagrams = enumerate_diagrams(shape);
      }
      for (const GoDiagram& d : diagrams) {
        if (en_le && !is_le_diagram(d)) continue;
        std::cout << to_text(d, true) << "\n";
      }
      return 0;
    }

    if (cmd_net->parsed()) {
      Network net = build_network(load_diagram(net_diagram, net_k, net_n));
      std::cout << (net_format == "dot" ? to_dot(net) : to_json_string(net)) << "\n";
      return 0;
    }

    if (cmd_w->parsed()) {
      GoDiagram d = load_diagram(w_diagram, w_k, w_n);
      Matrix<LaurentPolynomial> sym = weight_matrix(d);
      if (w_eval.empty()) {
        std::cout << matrix_to_json(sym) << "\n";
        return 0;
      }
      FieldChoice field = parse_field(w_field, false);
      if (field.rational) {
        auto vals = parse_assignments<Rational>(w_eval, &parse_rational, nullptr);
        std::cout << matrix_to_json(evaluate_matrix(sym, vals, Rational(1))) << "\n";
      } else {
        auto vals = parse_assignments<PrimeFieldElement>(w_eval, &parse_prime_field, &field.p);
        std::cout << matrix_to_json(evaluate_matrix(sym, vals, PrimeFieldElement(1, field.p)))
                  << "\n";
      }
      return 0;
    }

    if (cmd_p->parsed()) {
      if (p_diagram.empty() == p_matrix.empty())
        throw std::invalid_argument("pass exactly one of --diagram and --matrix");
      if (!p_diagram.empty()) {
        if (!parse_field(p_field, true).laurent)
          throw std::invalid_argument(
              "--diagram coordinates are symbolic; --field must be laurent");
        GoDiagram d = load_diagram(p_diagram, p_k, p_n);
        return print_plucker(plucker_vector(weight_matrix(d)), p_subset);
      }
      FieldChoice field = parse_field(p_field, true);
      std::string text = read_file(p_matrix);
      if (field.laurent) return print_plucker(plucker_vector(matrix_from_json_laurent(text)), p_subset);
      if (field.rational)
        return print_plucker(plucker_vector(matrix_from_json_rational(text)), p_subset);
      return print_plucker(plucker_vector(matrix_from_json_prime(text)), p_subset);
    }

    if (cmd_mr->parsed()) {
      GoDiagram d = load_diagram(mr_diagram, mr_k, mr_n);
      if (mr_show == "L")
        std::cout << to_json_string(chip_word(d)) << "\n";
      else if (mr_show == "g")
        std::cout << matrix_to_json(group_element(chip_word(d))) << "\n";
      else if (mr_show == "M")
        std::cout << matrix_to_json(mr_matrix(d)) << "\n";
      else
        std::cout << matrix_to_json(rescale(mr_matrix(d))) << "\n";
      return 0;
    }

    if (cmd_v->parsed()) {
      SuiteReport suite = verify_suite(v_theorem, v_k, v_n, v_exhaustive, v_seed, v_trials);
      std::cout << to_json_string(suite) << "\n";
      return suite.passed ? 0 : 2;
    }

    if (cmd_id->parsed()) {
      if (id_matrix.empty() == id_plucker.empty())
        throw std::invalid_argument("pass exactly one of --matrix and --plucker");
      FieldChoice field = parse_field(id_field, false);
      if (field.rational) {
        auto p = id_matrix.empty() ? plucker_from_json_rational(read_file(id_plucker))
                                   : plucker_vector(matrix_from_json_rational(read_file(id_matrix)));
        return print_identification(p);
      }
      auto p = id_matrix.empty() ? plucker_from_json_prime(read_file(id_plucker))
                                 : plucker_vector(matrix_from_json_prime(read_file(id_matrix)));
      return print_identification(p);
    }

    if (cmd_nk->parsed()) {
      if (nk_matrix.empty() == nk_plucker.empty())
        throw std::invalid_argument("pass exactly one of --matrix and --plucker");
      FieldChoice field = parse_field(nk_field, true);
      GrassmannNecklace nk;
      if (field.laurent) {
        nk = grassmann_necklace(nk_matrix.empty()
                                    ? plucker_from_json_laurent(read_file(nk_plucker))
                                    : plucker_vector(matrix_from_json_laurent(read_file(nk_matrix))));
      } else if (field.rational) {
        nk = grassmann_necklace(nk_matrix.empty()
                                    ? plucker_from_json_rational(read_file(nk_plucker))
                                    : plucker_vector(matrix_from_json_rational(read_file(nk_matrix))));
      } else {
        nk = grassmann_necklace(nk_matrix.empty()
                                    ? plucker_from_json_prime(read_file(nk_plucker))
                                    : plucker_vector(matrix_from_json_prime(read_file(nk_matrix))));
      }
      std::cout << to_json_string(nk) << "\n";
      return 0;
    }

    if (cmd_c->parsed()) {
      if (c_symbolic == c_q.has_value())
        throw std::invalid_argument("pass exactly one of --q and --symbolic");
      if (c_symbolic) {
        std::cout << grassmannian_point_count_symbolic(c_k, c_n).to_string() << "\n";
        return 0;
      }
      Integer q(*c_q);
      std::ostringstream out;
      out << "{\"k\": " << c_k << ", \"n\": " << c_n << ", \"q\": " << *c_q << ", \"total\": \""
          << to_string(grassmannian_point_count(c_k, c_n, q)) << "\", \"components\": {";
      bool first = true;
      for (const GoDiagram& d : enumerate_diagrams(c_k, c_n)) {
        out << (first ? "" : ", ") << '"' << to_text(d, true) << "\": \""
            << to_string(component_point_count(d, q)) << '"';
        first = false;
      }
      out << "}}";
      std::cout << out.str() << "\n";
      return 0;
    }

    if (cmd_r->parsed()) {
      std::vector<int> one_line = parse_int_list(r_v, "permutation");
      Permutation v(one_line);
      ReducedWord word{v.n(), parse_int_list(r_word, "word")};
      for (int letter : word.letters)
        if (letter < 1 || letter >= v.n())
          throw std::invalid_argument("word letter out of range for S_" + std::to_string(v.n()));
      std::cout << r_polynomial(v, word).to_string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return 1;
  }
  return 0;
}
