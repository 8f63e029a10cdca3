#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "yamaguti/expression.hpp"
#include "yamaguti/phase_space.hpp"

namespace yamaguti {

/// Every artifact kind; the order matches the alternatives of Document::Payload.
enum class Kind {
  LyAlgebra,
  LieAlgebra,
  PreLyAlgebra,
  Representation,
  LinearMap,
  BilinearForm,
  SymplecticForm,
  PhaseSpace,
  ManinInput,
};

inline constexpr std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::LyAlgebra: return "ly-algebra";
    case Kind::LieAlgebra: return "lie-algebra";
    case Kind::PreLyAlgebra: return "pre-ly-algebra";
    case Kind::Representation: return "representation";
    case Kind::LinearMap: return "linear-map";
    case Kind::BilinearForm: return "bilinear-form";
    case Kind::SymplecticForm: return "symplectic-form";
    case Kind::PhaseSpace: return "phase-space";
    case Kind::ManinInput: return "manin-input";
  }
  return "";
}

struct Document {
  using Payload = std::variant<LYAlgebra, LieAlgebra, PreLYAlgebra, Representation, Matrix,
                               BilinearForm, SymplecticForm, PhaseSpace, ManinTripleInput>;
  Payload payload;

  Kind kind() const { return static_cast<Kind>(payload.index()); }

  template <typename T>
  const T& as() const {
    if (const T* p = std::get_if<T>(&payload)) return *p;
    throw FormatError("unexpected document kind '" + std::string(kind_name(kind())) + "'");
  }
};

struct ParseOptions {
  /// Directory against which relative `algebra`/`form` paths are resolved.
  std::filesystem::path base_dir = ".";
  Parameters params;
};

namespace detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

class DocumentReader {
 public:
  explicit DocumentReader(const ParseOptions& options) : options_(options) {}

  Document read(const json& j) const {
    if (!j.is_object()) throw FormatError("document must be a JSON object");
    std::string kind = string_field(j, "kind", "document");
    if (kind == "ly-algebra") return {read_ly(j)};
    if (kind == "lie-algebra") return {read_lie(j)};
    if (kind == "pre-ly-algebra") return {read_pre_ly(j)};
    if (kind == "representation") return {read_rep(j)};
    if (kind == "linear-map") return {read_linear_map(j)};
    if (kind == "bilinear-form") return {BilinearForm(read_gram(j, kind))};
    if (kind == "symplectic-form") return {SymplecticForm(read_gram(j, kind))};
    if (kind == "phase-space") return {read_phase_space(j)};
    if (kind == "manin-input") return {read_manin(j)};
    throw FormatError("unknown document kind '" + kind + "'");
  }

 private:
  static const json& field(const json& j, const char* name, std::string_view where) {
    auto it = j.find(name);
    if (it == j.end()) {
      throw FormatError("missing field '" + std::string(name) + "' in " + std::string(where));
    }
    return *it;
  }

  static std::string string_field(const json& j, const char* name, std::string_view where) {
    const json& v = field(j, name, where);
    if (!v.is_string()) throw FormatError("field '" + std::string(name) + "' must be a string");
    return v.get<std::string>();
  }

  static std::size_t size_field(const json& j, const char* name, std::string_view where) {
    const json& v = field(j, name, where);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw FormatError("field '" + std::string(name) + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
  }

  static const json& array_field(const json& j, const char* name, std::string_view where,
                                 bool optional = false) {
    static const json empty = json::array();
    auto it = j.find(name);
    if (it == j.end()) {
      if (optional) return empty;
      field(j, name, where);
    }
    if (!it->is_array()) throw FormatError("field '" + std::string(name) + "' must be a list");
    return *it;
  }

  Scalar scalar(const json& v) const {
    if (v.is_string()) return evaluate_expression(v.get<std::string>(), options_.params);
    if (v.is_number_integer()) {
      return v.is_number_unsigned() ? Scalar(mpz_class(std::to_string(v.get<unsigned long long>())))
                                    : Scalar(mpz_class(std::to_string(v.get<long long>())));
    }
    throw FormatError("coefficient " + v.dump() + " must be a rational string or an integer");
  }

  Vector coefficients(const json& v, std::size_t n, std::string_view what) const {
    if (!v.is_array() || v.size() != n) {
      throw DimensionError(std::string(what) + " must be a list of " + std::to_string(n) +
                           " coefficients");
    }
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = scalar(v[i]);
    return out;
  }

  Matrix matrix(const json& v, std::size_t rows, std::size_t cols, std::string_view what) const {
    if (!v.is_array() || v.size() != rows) {
      throw DimensionError(std::string(what) + " must have " + std::to_string(rows) + " rows");
    }
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      Vector row = coefficients(v[r], cols, std::string(what) + " row");
      for (std::size_t c = 0; c < cols; ++c) out(r, c) = row[c];
    }
    return out;
  }

  static std::size_t index(const json& v, std::size_t n, std::string_view what) {
    if (!v.is_number_integer()) throw FormatError(std::string(what) + " index must be an integer");
    long long i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > n) {
      throw DimensionError(std::string(what) + " index " + std::to_string(i) +
                           " outside 1.." + std::to_string(n));
    }
    return static_cast<std::size_t>(i - 1);
  }

  static const json& entry(const json& e, std::size_t length, std::string_view what) {
    if (!e.is_array() || e.size() != length) {
      throw FormatError(std::string(what) + " entries must be lists of length " +
                        std::to_string(length));
    }
    return e;
  }

  LYAlgebra read_ly(const json& j) const {
    std::size_t n = size_field(j, "dim", "ly-algebra");
    LYAlgebraBuilder b(n);
    for (const auto& e : array_field(j, "binary", "ly-algebra", true)) {
      entry(e, 3, "binary");
      b.binary(index(e[0], n, "binary"), index(e[1], n, "binary"), coefficients(e[2], n, "binary value"));
    }
    for (const auto& e : array_field(j, "ternary", "ly-algebra", true)) {
      entry(e, 4, "ternary");
      b.ternary(index(e[0], n, "ternary"), index(e[1], n, "ternary"), index(e[2], n, "ternary"),
                coefficients(e[3], n, "ternary value"));
    }
    LYAlgebra a = std::move(b).build();
    if (auto it = j.find("labels"); it != j.end()) {
      if (!it->is_array()) throw FormatError("field 'labels' must be a list");
      std::vector<std::string> labels;
      for (const auto& l : *it) {
        if (!l.is_string()) throw FormatError("labels must be strings");
        labels.push_back(l.get<std::string>());
      }
      a.set_labels(std::move(labels));
    }
    return a;
  }

  LieAlgebra read_lie(const json& j) const {
    std::size_t n = size_field(j, "dim", "lie-algebra");
    LieAlgebraBuilder b(n);
    for (const auto& e : array_field(j, "binary", "lie-algebra", true)) {
      entry(e, 3, "binary");
      b.bracket(index(e[0], n, "binary"), index(e[1], n, "binary"), coefficients(e[2], n, "binary value"));
    }
    return std::move(b).build();
  }

  PreLYAlgebra read_pre_ly(const json& j) const {
    std::size_t n = size_field(j, "dim", "pre-ly-algebra");
    PreLYAlgebraBuilder b(n);
    for (const auto& e : array_field(j, "star", "pre-ly-algebra", true)) {
      entry(e, 3, "star");
      b.star(index(e[0], n, "star"), index(e[1], n, "star"), coefficients(e[2], n, "star value"));
    }
    for (const auto& e : array_field(j, "braces", "pre-ly-algebra", true)) {
      entry(e, 4, "braces");
      b.braces(index(e[0], n, "braces"), index(e[1], n, "braces"), index(e[2], n, "braces"),
               coefficients(e[3], n, "braces value"));
    }
    return std::move(b).build();
  }

  Document nested(const json& j, const char* name, Kind expected, std::string_view where) const {
    const json& v = field(j, name, where);
    Document d;
    if (v.is_string()) {
      std::filesystem::path path = options_.base_dir / v.get<std::string>();
      std::ifstream in(path);
      if (!in) throw Error("cannot open '" + path.string() + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      ParseOptions inner = options_;
      inner.base_dir = path.parent_path();
      json parsed = parse_json(buffer.str());
      d = DocumentReader(inner).read(parsed);
    } else if (v.is_object()) {
      d = read(v);
    } else {
      throw FormatError("field '" + std::string(name) + "' must be a path or an inline document");
    }
    if (d.kind() != expected) {
      throw FormatError("field '" + std::string(name) + "' must hold a " +
                        std::string(kind_name(expected)) + " document, got " +
                        std::string(kind_name(d.kind())));
    }
    return d;
  }

  Representation read_rep(const json& j) const {
    LYAlgebra a = nested(j, "algebra", Kind::LyAlgebra, "representation").as<LYAlgebra>();
    std::size_t m = size_field(j, "vdim", "representation");
    const std::size_t n = a.dim();
    std::vector<Matrix> rho(n, Matrix(m, m));
    std::vector<std::vector<Matrix>> mu(n, std::vector<Matrix>(n, Matrix(m, m)));
    std::map<std::vector<std::size_t>, bool> seen;
    auto store = [&](Matrix& slot, std::vector<std::size_t> key, Matrix value) {
      if (seen.count(key) && !(slot == value)) {
        throw ConflictError("representation: conflicting values for one matrix entry");
      }
      seen[std::move(key)] = true;
      slot = std::move(value);
    };
    for (const auto& e : array_field(j, "rho", "representation", true)) {
      entry(e, 2, "rho");
      std::size_t i = index(e[0], n, "rho");
      store(rho[i], {0, i}, matrix(e[1], m, m, "rho matrix"));
    }
    for (const auto& e : array_field(j, "mu", "representation", true)) {
      entry(e, 3, "mu");
      std::size_t i = index(e[0], n, "mu");
      std::size_t k = index(e[1], n, "mu");
      store(mu[i][k], {1, i, k}, matrix(e[2], m, m, "mu matrix"));
    }
    return Representation(std::move(a), m, std::move(rho), std::move(mu));
  }

  Matrix read_linear_map(const json& j) const {
    std::size_t rows = size_field(j, "rows", "linear-map");
    std::size_t cols = size_field(j, "cols", "linear-map");
    return matrix(field(j, "matrix", "linear-map"), rows, cols, "matrix");
  }

  Matrix read_gram(const json& j, const std::string& kind) const {
    std::size_t n = size_field(j, "dim", kind);
    return matrix(field(j, "gram", kind), n, n, "gram");
  }

  PhaseSpace read_phase_space(const json& j) const {
    std::size_t h = size_field(j, "h_dim", "phase-space");
    return PhaseSpace(nested(j, "algebra", Kind::LyAlgebra, "phase-space").as<LYAlgebra>(), h);
  }

  std::vector<Vector> basis_list(const json& j, const char* name, std::size_t n) const {
    std::vector<Vector> out;
    for (const auto& v : array_field(j, name, "manin-input")) out.push_back(coefficients(v, n, name));
    return out;
  }

  ManinTripleInput read_manin(const json& j) const {
    ManinTripleInput m;
    m.total = nested(j, "algebra", Kind::PreLyAlgebra, "manin-input").as<PreLYAlgebra>();
    m.omega = nested(j, "form", Kind::SymplecticForm, "manin-input").as<SymplecticForm>();
    m.split_a = basis_list(j, "split_a", m.total.dim());
    m.split_b = basis_list(j, "split_b", m.total.dim());
    return m;
  }

 public:
  static json parse_json(std::string_view text) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      std::size_t line = 1, column = 1;
      std::size_t end = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
      for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      std::string what = e.what();
      std::size_t cut = what.find(": ", what.find("column"));
      throw ParseError(line, column, cut == std::string::npos ? what : what.substr(cut + 2));
    }
  }

 private:
  const ParseOptions& options_;
};

inline ordered_json scalar_json(const Scalar& s) { return to_string(s); }

inline ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

inline ordered_json matrix_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

/// Nonzero entries in lexicographic index order, 1-based; with
/// `first_pair_ascending` only entries with i < j are kept.
template <std::size_t Arity>
ordered_json tensor_json(const StructureTensor<Arity>& t, bool first_pair_ascending) {
  ordered_json out = ordered_json::array();
  for_each_tuple(t.dim(), Arity, [&](const auto& i) {
    typename StructureTensor<Arity>::Index idx;
    for (std::size_t s = 0; s < Arity; ++s) idx[s] = i[s];
    if (first_pair_ascending && idx[0] >= idx[1]) return;
    if (t.is_zero(idx)) return;
    ordered_json e = ordered_json::array();
    for (std::size_t s = 0; s < Arity; ++s) e.push_back(idx[s] + 1);
    e.push_back(vector_json(t.at(idx)));
    out.push_back(std::move(e));
  });
  return out;
}

inline ordered_json document_json(const Document& d) {
  ordered_json j;
  j["kind"] = std::string(kind_name(d.kind()));
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LYAlgebra>) {
          j["dim"] = p.dim();
          if (!p.labels().empty()) j["labels"] = p.labels();
          j["binary"] = tensor_json(p.binary(), true);
          j["ternary"] = tensor_json(p.ternary(), true);
        } else if constexpr (std::is_same_v<T, LieAlgebra>) {
          j["dim"] = p.dim();
          j["binary"] = tensor_json(p.binary(), true);
        } else if constexpr (std::is_same_v<T, PreLYAlgebra>) {
          j["dim"] = p.dim();
          j["star"] = tensor_json(p.star_tensor(), false);
          j["braces"] = tensor_json(p.braces_tensor(), false);
        } else if constexpr (std::is_same_v<T, Representation>) {
          j["algebra"] = document_json(Document{p.base()});
          j["vdim"] = p.vdim();
          ordered_json rho = ordered_json::array(), mu = ordered_json::array();
          for (std::size_t i = 0; i < p.dim(); ++i)
            if (!p.rho()[i].is_zero()) rho.push_back({i + 1, matrix_json(p.rho()[i])});
          for (std::size_t i = 0; i < p.dim(); ++i)
            for (std::size_t k = 0; k < p.dim(); ++k)
              if (!p.mu()[i][k].is_zero()) mu.push_back({i + 1, k + 1, matrix_json(p.mu()[i][k])});
          j["rho"] = std::move(rho);
          j["mu"] = std::move(mu);
        } else if constexpr (std::is_same_v<T, Matrix>) {
          j["rows"] = p.rows();
          j["cols"] = p.cols();
          j["matrix"] = matrix_json(p);
        } else if constexpr (std::is_same_v<T, BilinearForm> || std::is_same_v<T, SymplecticForm>) {
          j["dim"] = p.dim();
          j["gram"] = matrix_json(p.gram());
        } else if constexpr (std::is_same_v<T, PhaseSpace>) {
          j["h_dim"] = p.h_dim;
          j["algebra"] = document_json(Document{p.total});
        } else if constexpr (std::is_same_v<T, ManinTripleInput>) {
          j["algebra"] = document_json(Document{p.total});
          j["form"] = document_json(Document{p.omega});
          ordered_json a = ordered_json::array(), b = ordered_json::array();
          for (const auto& v : p.split_a) a.push_back(vector_json(v));
          for (const auto& v : p.split_b) b.push_back(vector_json(v));
          j["split_a"] = std::move(a);
          j["split_b"] = std::move(b);
        }
      },
      d.payload);
  return j;
}

}  // namespace detail

/// Parses document text. Syntax errors raise ParseError with line and
/// column; shape problems raise FormatError, DimensionError or ConflictError.
inline Document parse_document(std::string_view text, const ParseOptions& options = {}) {
  return detail::DocumentReader(options).read(detail::DocumentReader::parse_json(text));
}

inline Document load_document(const std::filesystem::path& path, const Parameters& params = {}) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  ParseOptions options;
  options.base_dir = path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path();
  options.params = params;
  return parse_document(buffer.str(), options);
}

/// Canonical text: fixed key order, nonzero entries only, sorted indices,
/// reduced rationals, nested documents inlined.
inline std::string serialize(const Document& d) { return detail::document_json(d).dump(2) + "\n"; }

}  // namespace yamaguti
