#include "escalier/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace escalier {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    out.push_back({no, t});
  }
  return out;
}

[[noreturn]] void fail_at(const Line& l, const std::string& msg) {
  throw ParseError("line " + std::to_string(l.number) + ": " + msg);
}

struct Header {
  std::string kind;
  std::map<std::string, std::string> fields;
};

Header parse_header(const Line& l) {
  std::istringstream ss(l.text);
  Header h;
  ss >> h.kind;
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) fail_at(l, "expected key=value, got '" + tok + "'");
    h.fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return h;
}

std::uint64_t parse_uint(const Line& l, const std::string& key, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    fail_at(l, key + " must be a natural number, got '" + v + "'");
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    fail_at(l, key + " is out of range");
  }
}

const Line& expect_header(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty()) throw ParseError("empty file, expected a '" + kind + "' header");
  if (parse_header(lines[0]).kind != kind) fail_at(lines[0], "expected a '" + kind + "' header");
  return lines[0];
}

std::size_t header_nvars(const Line& l, const Header& h) {
  auto it = h.fields.find("n");
  if (it == h.fields.end()) fail_at(l, "missing n=");
  auto n = parse_uint(l, "n", it->second);
  if (n == 0) fail_at(l, "n must be at least 1");
  return n;
}

PrimeField header_field(const Line& l, const Header& h, std::optional<Coeff> override_p) {
  std::uint64_t p = 32003;
  if (auto it = h.fields.find("p"); it != h.fields.end()) p = parse_uint(l, "p", it->second);
  if (override_p) p = *override_p;
  try {
    return PrimeField(static_cast<Coeff>(p));
  } catch (const MathError& e) {
    fail_at(l, e.what());
  }
}

template <class F>
auto at_line(const Line& l, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    fail_at(l, e.what());
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace

IdealFile read_ideal(std::istream& in, std::optional<Coeff> prime_override) {
  auto lines = content_lines(in);
  const Line& hl = expect_header(lines, "ring");
  Header h = parse_header(hl);
  IdealFile f;
  f.nvars = header_nvars(hl, h);
  f.field = header_field(hl, h, prime_override);
  if (auto it = h.fields.find("order"); it != h.fields.end()) {
    try {
      f.order = parse_order_kind(it->second);
    } catch (const std::exception& e) {
      fail_at(hl, e.what());
    }
  }
  for (std::size_t i = 1; i < lines.size(); ++i)
    f.polys.push_back(at_line(lines[i], [&] { return parse_polynomial(lines[i].text, f.nvars, f.field); }));
  return f;
}

void write_ideal(std::ostream& out, const IdealFile& f) {
  out << "ring n=" << f.nvars << " p=" << f.field.prime() << " order=" << to_string(f.order) << '\n';
  TermOrder render(f.order, f.nvars);
  for (const auto& p : f.polys) out << to_string(p, render) << '\n';
}

IdealFile read_ideal_file(const std::string& path, std::optional<Coeff> prime_override) {
  auto in = open_or_throw(path);
  return read_ideal(in, prime_override);
}

NcIdealFile read_nc_ideal(std::istream& in, std::optional<Coeff> prime_override) {
  auto lines = content_lines(in);
  const Line& hl = expect_header(lines, "free");
  Header h = parse_header(hl);
  NcIdealFile f;
  f.nvars = header_nvars(hl, h);
  f.field = header_field(hl, h, prime_override);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i].text;
    if (f.polys.empty() && f.section.empty() && t.find_first_not_of("ABCDEFGHIJKLMNOPQRSTUVWYZ") == std::string::npos) {
      f.section = t;
      continue;
    }
    f.polys.push_back(at_line(lines[i], [&] { return parse_nc_polynomial(t, f.nvars, f.field); }));
  }
  return f;
}

void write_nc_ideal(std::ostream& out, const NcIdealFile& f) {
  out << "free n=" << f.nvars << " p=" << f.field.prime() << '\n';
  if (!f.section.empty()) out << f.section << '\n';
  WordOrder render(f.nvars);
  for (const auto& p : f.polys) out << to_string(p, render) << '\n';
}

NcIdealFile read_nc_ideal_file(const std::string& path, std::optional<Coeff> prime_override) {
  auto in = open_or_throw(path);
  return read_nc_ideal(in, prime_override);
}

bool is_nc_file(const std::string& path) {
  auto in = open_or_throw(path);
  auto lines = content_lines(in);
  return !lines.empty() && parse_header(lines[0]).kind == "free";
}

void write_result(std::ostream& out, const StaircaseResult& r, const TermOrder& render) {
  out << "generators k=" << r.generators.size() << " D=" << r.bound << '\n';
  for (const auto& t : r.generators) out << to_string(t) << '\n';
  out << "basis\n";
  for (const auto& g : r.reduced_basis) out << to_string(g, render) << '\n';
  out << "queries " << r.queries_used << '\n';
}

ResultFile read_result(std::istream& in, std::size_t nvars, const PrimeField& field) {
  auto lines = content_lines(in);
  const Line& hl = expect_header(lines, "generators");
  Header h = parse_header(hl);
  ResultFile r;
  if (!h.fields.count("k") || !h.fields.count("D")) fail_at(hl, "expected k= and D=");
  const auto k = parse_uint(hl, "k", h.fields["k"]);
  r.bound = static_cast<Exponent>(parse_uint(hl, "D", h.fields["D"]));
  std::size_t i = 1;
  for (; i < lines.size() && r.generators.size() < k; ++i)
    r.generators.push_back(at_line(lines[i], [&] { return parse_term(lines[i].text, nvars); }));
  if (r.generators.size() != k) throw ParseError("result file ends inside the generator list");
  if (i >= lines.size() || lines[i].text != "basis") throw ParseError("result file: expected 'basis'");
  for (++i; i < lines.size() && lines[i].text.rfind("queries", 0) != 0; ++i)
    r.basis.push_back(at_line(lines[i], [&] { return parse_polynomial(lines[i].text, nvars, field); }));
  if (i >= lines.size()) throw ParseError("result file: expected 'queries <count>'");
  std::istringstream ss(lines[i].text.substr(7));
  std::string v;
  ss >> v;
  r.queries = parse_uint(lines[i], "queries", v);
  return r;
}

void write_public_key(std::ostream& out, const PublicKey& pub) {
  out << "public n=" << pub.nvars << " p=" << pub.field.prime() << " eth=" << pub.eth << " delta=" << pub.delta << '\n';
  TermOrder render(OrderKind::DegLex, pub.nvars);
  out << "G\n";
  for (const auto& g : pub.G) out << to_string(g, render) << '\n';
  out << "T\n";
  for (const auto& t : pub.T) out << to_string(t) << '\n';
}

PublicKey read_public_key(std::istream& in) {
  auto lines = content_lines(in);
  const Line& hl = expect_header(lines, "public");
  Header h = parse_header(hl);
  PublicKey pub;
  pub.nvars = header_nvars(hl, h);
  pub.field = header_field(hl, h, std::nullopt);
  if (!h.fields.count("eth") || !h.fields.count("delta")) fail_at(hl, "expected eth= and delta=");
  pub.eth = parse_uint(hl, "eth", h.fields["eth"]);
  pub.delta = parse_uint(hl, "delta", h.fields["delta"]);
  enum { None, InG, InT } sec = None;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.text == "G") {
      sec = InG;
    } else if (l.text == "T") {
      sec = InT;
    } else if (sec == InG) {
      pub.G.push_back(at_line(l, [&] { return parse_polynomial(l.text, pub.nvars, pub.field); }));
    } else if (sec == InT) {
      pub.T.push_back(at_line(l, [&] { return parse_term(l.text, pub.nvars); }));
    } else {
      fail_at(l, "expected a 'G' or 'T' section");
    }
  }
  return pub;
}

PublicKey read_public_key_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_public_key(in);
}

void write_private_key(std::ostream& out, const PrivateKey& key) {
  IdealFile f;
  f.nvars = key.order.nvars();
  f.field = key.basis.empty() ? PrimeField() : key.basis.front().field();
  f.order = key.order.kind();
  f.polys = key.basis;
  write_ideal(out, f);
}

PrivateKey read_private_key_file(const std::string& path) {
  auto f = read_ideal_file(path);
  TermOrder order(f.order, f.nvars);
  return {order, buchberger(f.polys, order)};
}

void write_ciphers(std::ostream& out, std::size_t nvars, const PrimeField& field, const std::vector<Polynomial>& cs) {
  out << "cipher n=" << nvars << " p=" << field.prime() << '\n';
  TermOrder render(OrderKind::DegLex, nvars);
  for (const auto& c : cs) out << to_string(c, render) << '\n';
}

std::vector<Polynomial> read_ciphers(std::istream& in, std::size_t& nvars, PrimeField& field) {
  auto lines = content_lines(in);
  const Line& hl = expect_header(lines, "cipher");
  Header h = parse_header(hl);
  nvars = header_nvars(hl, h);
  field = header_field(hl, h, std::nullopt);
  std::vector<Polynomial> out;
  for (std::size_t i = 1; i < lines.size(); ++i)
    out.push_back(at_line(lines[i], [&] { return parse_polynomial(lines[i].text, nvars, field); }));
  return out;
}

std::vector<Polynomial> read_ciphers_file(const std::string& path, std::size_t& nvars, PrimeField& field) {
  auto in = open_or_throw(path);
  return read_ciphers(in, nvars, field);
}

void write_bound_report(std::ostream& out, const ForgeOutput& f, const BoundReport& r) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "# forge delta=" << f.delta << " omega=" << to_string(f.omega)
      << " closed_form=" << to_string(f.omega_closed_form) << " closed_form_matches=" << yes(f.closed_form_matches)
      << " H_groebner=" << yes(f.H_is_groebner) << '\n';
  out << "# h0 = " << to_string(f.h0, f.order) << '\n';
  out << "# I_delta at D=" << r.D_small << " matches G(I) in box: " << yes(r.small_matches) << '\n';
  write_result(out, r.small, f.order);
  out << "# I_delta at D=" << r.D_big << " matches G(I_delta) in box: " << yes(r.big_matches) << '\n';
  write_result(out, r.big, f.order);
  out << "# agree_below=" << yes(r.agree_below) << " differ=" << yes(r.differ) << '\n';
}

}  // namespace escalier
