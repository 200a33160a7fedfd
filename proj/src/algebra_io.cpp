#include <fstream>
#include <sstream>
#include <utility>

#include "axial/algebra.hpp"

namespace axial {

namespace {

// Strips a '#' comment and surrounding whitespace; empty result = skip line.
std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s = s.substr(0, hash);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::size_t parse_index(const std::string& tok, int line, std::size_t dim,
                        const char* what) {
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    if (v >= dim)
      throw ParseError(line, std::string(what) + " index " + tok + " out of range");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError(line, std::string("bad ") + what + " index '" + tok + "'");
  }
}

}  // namespace

AlgebraRef load_algebra_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  FieldSpec field;
  bool have_field = false, have_dim = false;
  std::size_t dim = 0;
  std::vector<Scalar> mult;
  Mat gram;
  std::vector<bool> mult_seen, form_seen;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip(raw);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;

    if (!have_field) {
      if (kw != "field") throw ParseError(lineno, "expected 'field' line");
      std::string fk;
      ls >> fk;
      if (fk == "Q") {
        field = FieldSpec::rationals();
      } else if (fk == "GF") {
        unsigned long p = 0;
        if (!(ls >> p)) throw ParseError(lineno, "expected prime after 'GF'");
        try {
          field = FieldSpec::prime_field(p);
        } catch (const Error& e) {
          throw ParseError(lineno, e.what());
        }
      } else {
        throw ParseError(lineno, "unknown field '" + fk + "'");
      }
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens on field line");
      have_field = true;
      continue;
    }

    if (!have_dim) {
      if (kw != "dim") throw ParseError(lineno, "expected 'dim' line");
      long n = 0;
      if (!(ls >> n) || n <= 0) throw ParseError(lineno, "dim must be a positive integer");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens on dim line");
      dim = static_cast<std::size_t>(n);
      Field f(field);
      mult.assign(dim * dim * dim, f.zero());
      gram = Mat(dim, dim);
      for (auto& g : gram.a) g = f.zero();
      mult_seen.assign(dim * dim * dim, false);
      form_seen.assign(dim * dim, false);
      have_dim = true;
      continue;
    }

    if (kw == "mult") {
      std::string si, sj, sk, sv;
      if (!(ls >> si >> sj >> sk >> sv))
        throw ParseError(lineno, "mult needs: i j k scalar");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens on mult line");
      std::size_t i = parse_index(si, lineno, dim, "row");
      std::size_t j = parse_index(sj, lineno, dim, "column");
      std::size_t k = parse_index(sk, lineno, dim, "target");
      if (i > j) std::swap(i, j);  // writer emits i <= j, loader is lenient
      Scalar v;
      try {
        v = scalar_parse(sv, field);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
      if (mult_seen[(i * dim + j) * dim + k])
        throw ParseError(lineno, "duplicate mult entry");
      mult_seen[(i * dim + j) * dim + k] = true;
      mult[(i * dim + j) * dim + k] = v;
      mult[(j * dim + i) * dim + k] = v;  // loader mirrors (i,j) to (j,i)
    } else if (kw == "form") {
      std::string si, sj, sv;
      if (!(ls >> si >> sj >> sv)) throw ParseError(lineno, "form needs: i j scalar");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens on form line");
      std::size_t i = parse_index(si, lineno, dim, "row");
      std::size_t j = parse_index(sj, lineno, dim, "column");
      if (i > j) std::swap(i, j);
      Scalar v;
      try {
        v = scalar_parse(sv, field);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
      if (form_seen[i * dim + j]) throw ParseError(lineno, "duplicate form entry");
      form_seen[i * dim + j] = true;
      gram.at(i, j) = v;
      gram.at(j, i) = v;
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }

  if (!have_field) throw ParseError(lineno, "missing 'field' line");
  if (!have_dim) throw ParseError(lineno, "missing 'dim' line");
  return new_algebra(field, dim, std::move(mult), std::move(gram));
}

AlgebraRef load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_algebra_text(buf.str());
}

std::string algebra_to_text(const AlgebraRef& A) {
  const Field& f = A->field();
  std::ostringstream os;
  if (A->field_spec().kind == FieldKind::Rationals)
    os << "field Q\n";
  else
    os << "field GF " << A->field_spec().p << "\n";
  os << "dim " << A->dim() << "\n";
  for (std::size_t i = 0; i < A->dim(); ++i)
    for (std::size_t j = i; j < A->dim(); ++j)
      for (std::size_t k = 0; k < A->dim(); ++k)
        if (!f.is_zero(A->c(i, j, k)))
          os << "mult " << i << " " << j << " " << k << " "
             << f.to_string(A->c(i, j, k)) << "\n";
  for (std::size_t i = 0; i < A->dim(); ++i)
    for (std::size_t j = i; j < A->dim(); ++j)
      if (!f.is_zero(A->gram().at(i, j)))
        os << "form " << i << " " << j << " " << f.to_string(A->gram().at(i, j))
           << "\n";
  return os.str();
}

void save_algebra(const AlgebraRef& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Error::Cat::Precondition, "cannot write '" + path + "'");
  out << algebra_to_text(A);
}

}  // namespace axial
