#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "escalier/crypto.hpp"
#include "escalier/error.hpp"
#include "escalier/forge.hpp"
#include "escalier/io.hpp"
#include "escalier/oracle.hpp"
#include "escalier/staircase.hpp"
#include "escalier/word_recon.hpp"

namespace escalier::cli {

namespace {

// One subcommand runs per invocation, so all flags share one record.
struct Args {
  std::string ideal, order, out, pub, priv, cipher, j, out_i, out_idelta, out_private, out_public, out_messages,
      out_plain, search = "linear";
  std::vector<std::string> messages;
  Exponent bound = 0;
  Exponent delta = 0;
  std::uint64_t seed = 1;
  std::uint64_t p = 0;
  std::size_t l = 2, m = 4, trials = 20, random_count = 0, check = 0;
  std::uint64_t eth = 1;
  bool queries = false, brute = false, demo = false, masked = false;
  CLI::Option* p_opt = nullptr;
};

const std::vector<std::string> kOrders{"lex", "deglex", "degrevlex"};

void add_ideal(CLI::App* s, Args& a, bool required = true) {
  auto* o = s->add_option("--ideal", a.ideal, "ideal file")->check(CLI::ExistingFile);
  if (required) o->required();
}
void add_order(CLI::App* s, Args& a) {
  s->add_option("--order", a.order, "term order, overrides the file")->check(CLI::IsMember(kOrders));
}
void add_prime(CLI::App* s, Args& a) { a.p_opt = s->add_option("--p", a.p, "prime, overrides the file"); }
void add_seed(CLI::App* s, Args& a) { s->add_option("--seed", a.seed, "seed for all randomness"); }
void add_out(CLI::App* s, Args& a) { s->add_option("--out", a.out, "output file (default stdout)"); }
void add_queries(CLI::App* s, Args& a) { s->add_flag("--queries", a.queries, "print the query ledger"); }

std::optional<Coeff> prime_override(const Args& a) {
  if (a.p_opt && a.p_opt->count()) return static_cast<Coeff>(a.p);
  return std::nullopt;
}

void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write " + path);
  body(file);
}

void print_ledger(std::ostream& out, const Ledger& l) {
  out << "# ledger " << l.count << " queries\n";
  for (const auto& s : l.log) out << "# query " << s << '\n';
}

struct Ring {
  IdealFile file;
  TermOrder order;
  std::vector<Polynomial> gens;  // never empty; {0} stands for the zero ideal
};

Ring load_ring(const std::string& path, const Args& a) {
  auto f = read_ideal_file(path, prime_override(a));
  const OrderKind kind = a.order.empty() ? f.order : parse_order_kind(a.order);
  Ring r{f, TermOrder(kind, f.nvars), {}};
  for (const auto& g : f.polys)
    if (!g.is_zero()) r.gens.push_back(g);
  if (r.gens.empty()) r.gens.push_back(Polynomial(f.nvars, f.field));
  return r;
}

std::vector<NcPolynomial> nonzero_monic(const std::vector<NcPolynomial>& ps, const WordOrder& order) {
  std::vector<NcPolynomial> out;
  for (const auto& g : ps)
    if (!g.is_zero()) out.push_back(nc_make_monic(g, order));
  return out;
}

int cmd_recon(Args& a, std::ostream& out) {
  auto ring = load_ring(a.ideal, a);
  const std::size_t n = ring.file.nvars;
  GroebnerOracle o(ring.gens, ring.order);
  o.set_logging(a.queries);
  StaircaseResult r;
  if (a.brute) {
    r.bound = a.bound;
    r.generators = brute_force_generators(o, n, a.bound);
    for (const auto& t : r.generators) {
      auto m = Polynomial::monomial(t, 1, ring.file.field);
      r.reduced_basis.push_back(m - o.can_term(t));
    }
    r.queries_used = o.query_count();
  } else {
    StaircaseOptions opts;
    opts.search = a.search == "binary" ? SearchMode::Binary : SearchMode::Linear;
    r = reconstruct(o, n, a.bound, opts);
  }
  emit(a.out, out, [&](std::ostream& s) { write_result(s, r, ring.order); });
  if (a.queries) print_ledger(out, o.ledger());
  return 0;
}

int cmd_nc_recon(Args& a, std::ostream& out) {
  auto priv = read_nc_ideal_file(a.ideal, prime_override(a));
  auto pub = read_nc_ideal_file(a.pub, priv.field.prime());
  if (pub.nvars != priv.nvars) throw MathError("public and private files use different alphabets");
  WordOrder order(priv.nvars);
  NcGroebnerOracle o(nonzero_monic(priv.polys, order), order);
  o.set_logging(a.queries);
  Problem1Options opts;
  opts.masked = a.masked;
  opts.mask_seed = a.seed;
  auto r = solve_problem1(o, pub.polys, opts);
  emit(a.out, out, [&](std::ostream& s) {
    s << "free n=" << priv.nvars << " p=" << priv.field.prime() << '\n';
    for (const auto& line : r.trace) s << "# " << line << '\n';
    s << "# queries " << r.queries_used << '\n';
    s << "H\n";
    for (const auto& h : r.H) s << to_string(h, order) << '\n';
  });
  if (a.queries) print_ledger(out, o.ledger());
  return 0;
}

int cmd_forge(Args& a, std::ostream& out) {
  auto ring = load_ring(a.j, a);
  auto f = build_counterexample(ring.gens, ring.order, a.delta);
  auto ideal_of = [&](const std::vector<Polynomial>& ps) {
    return IdealFile{ring.file.nvars, ring.file.field, ring.order.kind(), ps};
  };
  if (!a.out_i.empty()) emit(a.out_i, out, [&](std::ostream& s) { write_ideal(s, ideal_of(f.I_generators)); });
  if (!a.out_idelta.empty()) emit(a.out_idelta, out, [&](std::ostream& s) { write_ideal(s, ideal_of(f.H)); });
  emit(a.out, out, [&](std::ostream& s) {
    if (a.demo) {
      write_bound_report(s, f, demonstrate_bound_necessity(f));
      return;
    }
    s << "# forge delta=" << f.delta << " omega=" << to_string(f.omega) << " closed_form=" << to_string(f.omega_closed_form)
      << " closed_form_matches=" << (f.closed_form_matches ? "yes" : "no")
      << " H_groebner=" << (f.H_is_groebner ? "yes" : "no") << '\n';
    write_ideal(s, ideal_of(f.H));
  });
  return 0;
}

int cmd_keygen(Args& a, std::ostream& out) {
  auto ring = load_ring(a.ideal, a);
  Rng rng(a.seed);
  KeygenParams params;
  params.l = a.l;
  params.eth = a.eth;
  params.m = a.m;
  auto kp = keygen(ring.gens, ring.order, params, rng);
  emit(a.out_private, out, [&](std::ostream& s) { write_private_key(s, kp.priv); });
  emit(a.out_public, out, [&](std::ostream& s) { write_public_key(s, kp.pub); });
  out << "# keygen l=" << kp.pub.G.size() << " m=" << kp.pub.T.size() << " delta=" << kp.pub.delta
      << " d(I)=" << gb_degree(kp.priv.basis) << '\n';
  return 0;
}

int cmd_encrypt(Args& a, std::ostream& out) {
  auto pub = read_public_key_file(a.pub);
  Rng rng(a.seed);
  std::vector<Polynomial> ms;
  for (const auto& text : a.messages) ms.push_back(parse_polynomial(text, pub.nvars, pub.field));
  std::uniform_int_distribution<Coeff> c(0, pub.field.prime() - 1);
  for (std::size_t i = 0; i < a.random_count; ++i) {
    Polynomial m(pub.nvars, pub.field);
    for (const auto& t : pub.T) m.add_term(t, c(rng));
    ms.push_back(m);
  }
  std::vector<Polynomial> cs;
  for (const auto& m : ms) cs.push_back(encrypt(pub, m, rng));
  if (!a.out_messages.empty())
    emit(a.out_messages, out, [&](std::ostream& s) { write_ciphers(s, pub.nvars, pub.field, ms); });
  emit(a.out, out, [&](std::ostream& s) { write_ciphers(s, pub.nvars, pub.field, cs); });
  return 0;
}

int cmd_decrypt(Args& a, std::ostream& out) {
  auto key = read_private_key_file(a.priv);
  std::size_t n = 0;
  PrimeField field;
  auto cs = read_ciphers_file(a.cipher, n, field);
  GroebnerOracle o(key.basis, key.order);
  if (n != o.nvars() || field.prime() != o.field().prime())
    throw MathError("ciphertext ring does not match the private key");
  o.set_logging(a.queries);
  std::vector<Polynomial> ms;
  for (const auto& c : cs) ms.push_back(decrypt(o, c));
  emit(a.out, out, [&](std::ostream& s) { write_ciphers(s, n, field, ms); });
  if (a.queries) print_ledger(out, o.ledger());
  return 0;
}

int cmd_attack(Args& a, std::ostream& out) {
  auto key = read_private_key_file(a.priv);
  auto pub = read_public_key_file(a.pub);
  GroebnerOracle o(key.basis, key.order);
  o.set_logging(a.queries);
  auto att = attack_commutative(o, pub, a.bound);
  const auto ledger = o.ledger();

  std::size_t agree = 0;
  Rng rng(a.seed);
  std::uniform_int_distribution<Coeff> c(0, pub.field.prime() - 1);
  for (std::size_t i = 0; i < a.check; ++i) {
    Polynomial m(pub.nvars, pub.field);
    for (const auto& t : pub.T) m.add_term(t, c(rng));
    auto ct = encrypt(pub, m, rng);
    if (att.decryptor(ct) == decrypt(o, ct)) ++agree;
  }
  if (!a.cipher.empty()) {
    std::size_t n = 0;
    PrimeField field;
    auto cs = read_ciphers_file(a.cipher, n, field);
    std::vector<Polynomial> ms;
    for (const auto& ct : cs) ms.push_back(att.decryptor(ct));
    emit(a.out_plain, out, [&](std::ostream& s) { write_ciphers(s, n, field, ms); });
  }
  emit(a.out, out, [&](std::ostream& s) {
    write_result(s, att.recon, TermOrder(OrderKind::DegLex, pub.nvars));
    if (a.check) s << "# check " << agree << "/" << a.check << " fresh ciphertexts agree with the oracle\n";
  });
  if (a.queries) print_ledger(out, ledger);
  return 0;
}

int cmd_nc_probe(Args& a, std::ostream& out) {
  auto priv = read_nc_ideal_file(a.ideal, prime_override(a));
  auto pub = read_nc_ideal_file(a.pub, priv.field.prime());
  WordOrder order(priv.nvars);
  NcGroebnerOracle o(nonzero_monic(priv.polys, order), order);
  o.set_logging(a.queries);
  Rng rng(a.seed);
  auto rep = nc_attack_probe(o, pub.polys, a.trials, rng);
  emit(a.out, out, [&](std::ostream& s) {
    s << "trials " << rep.trials << "\nsuccesses " << rep.successes << "\nfailures " << rep.failures << "\nh_size "
      << rep.h_size << "\nqueries " << rep.queries_used << '\n';
  });
  if (a.queries) print_ledger(out, o.ledger());
  return 0;
}

int cmd_verify_gb(Args& a, std::ostream& out) {
  bool pass = true;
  if (is_nc_file(a.ideal)) {
    auto f = read_nc_ideal_file(a.ideal, prime_override(a));
    WordOrder order(f.nvars);
    auto G = nonzero_monic(f.polys, order);
    auto amb = nc_ambiguities(G, order);
    emit(a.out, out, [&](std::ostream& s) {
      for (const auto& x : amb) {
        s << "ambiguity " << x.i + 1 << ' ' << x.j + 1 << ' ' << to_string(x.word) << ": "
          << to_string(x.residue, order) << '\n';
        pass = pass && x.residue.is_zero();
      }
      s << "result " << (pass ? "pass" : "fail") << '\n';
    });
  } else {
    auto ring = load_ring(a.ideal, a);
    auto checks = check_s_pairs(ring.gens, ring.order);
    emit(a.out, out, [&](std::ostream& s) {
      for (const auto& c : checks) {
        s << "pair " << c.i + 1 << ' ' << c.j + 1 << ": " << to_string(c.remainder, ring.order) << '\n';
        pass = pass && c.remainder.is_zero();
      }
      s << "result " << (pass ? "pass" : "fail") << '\n';
    });
  }
  return pass ? 0 : 1;
}

int cmd_bench_queries(Args& a, std::ostream& out) {
  auto ring = load_ring(a.ideal, a);
  const std::size_t n = ring.file.nvars;
  GroebnerOracle lin(ring.gens, ring.order), bin(ring.gens, ring.order), brute(ring.gens, ring.order);
  auto r1 = reconstruct(lin, n, a.bound);
  auto r2 = reconstruct(bin, n, a.bound, {SearchMode::Binary});
  auto g3 = brute_force_generators(brute, n, a.bound);
  std::size_t box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= a.bound + 1;
  emit(a.out, out, [&](std::ostream& s) {
    s << "box " << box << "\nstaircase " << r1.queries_used << "\nstaircase-binary " << r2.queries_used << "\nbrute "
      << brute.query_count() << "\ngenerators " << r1.generators.size() << "\nagree "
      << (r1.generators == g3 && r2.generators == g3 ? "yes" : "no") << '\n';
  });
  return 0;
}

int cmd_oracle(Args& a, std::istream& in, std::ostream& out) {
  auto ring = load_ring(a.ideal, a);
  GroebnerOracle o(ring.gens, ring.order);
  serve_line_protocol(o, ring.order, in, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner basis reconstruction from canonical-form oracles", "escalier"};
  app.require_subcommand(1);
  Args a;

  auto* recon = app.add_subcommand("recon", "reconstruct G(I) within B(D) from an oracle over an ideal file");
  add_ideal(recon, a);
  add_order(recon, a);
  add_prime(recon, a);
  recon->add_option("--bound", a.bound, "box bound D")->required();
  recon->add_option("--search", a.search, "lowest-term search in the 2-variable walk")
      ->check(CLI::IsMember({"linear", "binary"}));
  recon->add_flag("--brute", a.brute, "scan the whole box instead");
  add_queries(recon, a);
  add_out(recon, a);

  auto* ncr = app.add_subcommand("nc-recon", "build H from public polynomials and a free-algebra oracle");
  add_ideal(ncr, a);
  ncr->add_option("--public", a.pub, "free file with the public polynomials")->required()->check(CLI::ExistingFile);
  add_prime(ncr, a);
  ncr->add_flag("--masked", a.masked, "send masked queries");
  add_seed(ncr, a);
  add_queries(ncr, a);
  add_out(ncr, a);

  auto* forge = app.add_subcommand("forge", "build the pair X2*J, X2*J + (h0) for a bound delta");
  forge->add_option("--j,--ideal", a.j, "ideal file for J")->required()->check(CLI::ExistingFile);
  forge->add_option("--delta", a.delta, "degree bound delta")->required();
  add_order(forge, a);
  add_prime(forge, a);
  forge->add_flag("--demo", a.demo, "reconstruct at D = delta and delta + 1");
  forge->add_option("--out-i", a.out_i, "write the ideal X2*J");
  forge->add_option("--out-idelta", a.out_idelta, "write the ideal X2*J + (h0)");
  add_out(forge, a);

  auto* kg = app.add_subcommand("keygen", "generate a key pair from a private ideal");
  add_ideal(kg, a);
  add_order(kg, a);
  add_prime(kg, a);
  add_seed(kg, a);
  kg->add_option("--l", a.l, "number of public polynomials");
  kg->add_option("--eth", a.eth, "degree cap of the encryption multipliers");
  kg->add_option("--m", a.m, "number of message terms");
  kg->add_option("--out-private", a.out_private, "private key file")->required();
  kg->add_option("--out-public", a.out_public, "public key file")->required();

  auto* enc = app.add_subcommand("encrypt", "encrypt messages under a public key");
  enc->add_option("--public", a.pub, "public key file")->required()->check(CLI::ExistingFile);
  enc->add_option("--message", a.messages, "message polynomial over T (repeatable)");
  enc->add_option("--random", a.random_count, "also encrypt this many random messages");
  enc->add_option("--out-messages", a.out_messages, "write the plaintexts");
  add_seed(enc, a);
  add_out(enc, a);

  auto* dec = app.add_subcommand("decrypt", "decrypt with the private key oracle");
  dec->add_option("--private", a.priv, "private key file")->required()->check(CLI::ExistingFile);
  dec->add_option("--cipher", a.cipher, "cipher file")->required()->check(CLI::ExistingFile);
  add_queries(dec, a);
  add_out(dec, a);

  auto* att = app.add_subcommand("attack", "reconstruct a decryptor from the decryption oracle");
  att->add_option("--private", a.priv, "private key file backing the oracle")->required()->check(CLI::ExistingFile);
  att->add_option("--public", a.pub, "public key file")->required()->check(CLI::ExistingFile);
  att->add_option("--bound", a.bound, "box bound D (default: delta of the public key)");
  att->add_option("--check", a.check, "compare with the oracle on this many fresh ciphertexts");
  att->add_option("--cipher", a.cipher, "decrypt this cipher file with the recovered decryptor")
      ->check(CLI::ExistingFile);
  att->add_option("--out-plain", a.out_plain, "where to write those plaintexts (default stdout)");
  add_seed(att, a);
  add_queries(att, a);
  add_out(att, a);

  auto* probe = app.add_subcommand("nc-probe", "decrypt random free-algebra ciphertexts by reduction with H");
  add_ideal(probe, a);
  probe->add_option("--public", a.pub, "free file with the public polynomials")->required()->check(CLI::ExistingFile);
  probe->add_option("--trials", a.trials, "number of ciphertexts");
  add_prime(probe, a);
  add_seed(probe, a);
  add_queries(probe, a);
  add_out(probe, a);

  auto* vgb = app.add_subcommand("verify-gb", "check S-pairs (ring files) or ambiguities (free files)");
  add_ideal(vgb, a);
  add_order(vgb, a);
  add_prime(vgb, a);
  add_out(vgb, a);

  auto* bq = app.add_subcommand("bench-queries", "compare query counts of the staircase walk and the box scan");
  add_ideal(bq, a);
  add_order(bq, a);
  add_prime(bq, a);
  bq->add_option("--bound", a.bound, "box bound D")->required();
  add_out(bq, a);

  auto* orc = app.add_subcommand("oracle", "serve CAN/COUNT/QUIT requests on stdin");
  add_ideal(orc, a);
  add_order(orc, a);
  add_prime(orc, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (recon->parsed()) return cmd_recon(a, out);
    if (ncr->parsed()) return cmd_nc_recon(a, out);
    if (forge->parsed()) return cmd_forge(a, out);
    if (kg->parsed()) return cmd_keygen(a, out);
    if (enc->parsed()) return cmd_encrypt(a, out);
    if (dec->parsed()) return cmd_decrypt(a, out);
    if (att->parsed()) return cmd_attack(a, out);
    if (probe->parsed()) return cmd_nc_probe(a, out);
    if (vgb->parsed()) return cmd_verify_gb(a, out);
    if (bq->parsed()) return cmd_bench_queries(a, out);
    if (orc->parsed()) return cmd_oracle(a, in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace escalier::cli
