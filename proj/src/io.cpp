#include "doob/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace doob {

namespace {

// Returns the next non-comment line; false at EOF.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    return true;
  }
  return false;
}

// Streams whitespace-separated tokens, skipping '#' comment lines.
class TokenStream {
public:
  explicit TokenStream(std::istream& in) : in_(in) {}
  bool next(std::string& tok) {
    while (true) {
      if (!(cur_ >> tok)) {
        std::string line;
        if (!next_line(in_, line)) return false;
        cur_.clear();
        cur_.str(line);
        continue;
      }
      return true;
    }
  }

private:
  std::istream& in_;
  std::istringstream cur_;
};

long parse_kv(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw std::runtime_error("expected '" + key + "=<int>', got '" + tok + "'");
  return std::stol(tok.substr(key.size() + 1));
}

void atomic_write(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + tmp + " -> " + path);
}

} // namespace

Coloring read_pc1(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error(path + ": empty file");
  std::istringstream hdr(line);
  std::string magic, tm, tn, tk;
  hdr >> magic >> tm >> tn >> tk;
  if (magic != "pc1") throw std::runtime_error(path + ": expected pc1 header");
  Coloring c;
  c.spec.m = static_cast<int>(parse_kv(tm, "m"));
  c.spec.n = static_cast<int>(parse_kv(tn, "n"));
  c.k = static_cast<int>(parse_kv(tk, "k"));
  validate(c.spec);
  if (c.k < 1 || c.k > 255) throw std::runtime_error(path + ": unsupported color count");
  uint64_t N = num_vertices(c.spec);
  c.colors.reserve(N);
  TokenStream ts(in);
  std::string tok;
  for (uint64_t i = 0; i < N; ++i) {
    if (!ts.next(tok)) throw std::runtime_error(path + ": truncated color list");
    long v = std::stol(tok);
    if (v < 1 || v > c.k) throw std::runtime_error(path + ": color out of range: " + tok);
    c.colors.push_back(static_cast<uint8_t>(v));
  }
  if (ts.next(tok)) throw std::runtime_error(path + ": trailing data after colors");
  return c;
}

void write_pc1(const std::string& path, const Coloring& c,
               const std::string& header_comment) {
  std::ostringstream os;
  if (!header_comment.empty()) os << "# " << header_comment << "\n";
  os << "pc1 m=" << c.spec.m << " n=" << c.spec.n << " k=" << c.k << "\n";
  uint64_t N = num_vertices(c.spec);
  for (uint64_t i = 0; i < N; ++i) {
    os << static_cast<int>(c.colors[i]);
    os << (((i + 1) % 32 == 0 || i + 1 == N) ? '\n' : ' ');
  }
  atomic_write(path, os.str());
}

Code read_code1(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error(path + ": empty file");
  std::istringstream hdr(line);
  std::string magic, tm, tn;
  hdr >> magic >> tm >> tn;
  if (magic != "code1") throw std::runtime_error(path + ": expected code1 header");
  GraphSpec s;
  s.m = static_cast<int>(parse_kv(tm, "m"));
  s.n = static_cast<int>(parse_kv(tn, "n"));
  validate(s);
  Code c = Code::empty(s);
  TokenStream ts(in);
  std::string tok;
  uint64_t N = num_vertices(s);
  bool any = false;
  while (ts.next(tok)) {
    unsigned long long v = std::stoull(tok);
    if (v >= N) throw std::runtime_error(path + ": index out of range: " + tok);
    c.insert(v);
    any = true;
  }
  if (!any) throw std::runtime_error(path + ": empty code");
  return c;
}

void write_code1(const std::string& path, const Code& c,
                 const std::string& header_comment) {
  std::ostringstream os;
  if (!header_comment.empty()) os << "# " << header_comment << "\n";
  os << "code1 m=" << c.spec.m << " n=" << c.spec.n << "\n";
  for (uint64_t v : c.members()) os << v << "\n";
  atomic_write(path, os.str());
}

QuotientMatrix parse_quotient(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::istringstream es(row);
    std::vector<int> vals;
    int v;
    while (es >> v) {
      if (v < 0) throw std::runtime_error("quotient entries must be nonnegative");
      vals.push_back(v);
    }
    if (!es.eof()) throw std::runtime_error("bad quotient entry in row '" + row + "'");
    if (!vals.empty()) rows.push_back(vals);
  }
  if (rows.empty()) throw std::runtime_error("empty quotient matrix");
  QuotientMatrix S(static_cast<int>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::runtime_error("quotient matrix must be square");
    for (size_t j = 0; j < rows[i].size(); ++j)
      S.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return S;
}

} // namespace doob
