#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "escalier/crypto.hpp"
#include "escalier/forge.hpp"
#include "escalier/staircase.hpp"

// Text formats. Blank lines and lines starting with '#' are ignored by
// every reader.
//
//   ideal:   ring n=<n> [p=<prime>] [order=lex|deglex|degrevlex]
//            <polynomial>            one per line
//   free:    free n=<n> [p=<prime>]
//            [<section>]             optional section name line, e.g. H
//            <nc polynomial>         one per line
//   result:  generators k=<k> D=<D>
//            <term> x k
//            basis
//            <polynomial> x k
//            queries <count>
//   public:  public n=<n> p=<prime> eth=<eth> delta=<delta>
//            G
//            <polynomial> ...
//            T
//            <term> ...
//   cipher:  cipher n=<n> p=<prime>
//            <polynomial>            one ciphertext (or message) per line

namespace escalier {

struct IdealFile {
  std::size_t nvars = 0;
  PrimeField field;
  OrderKind order = OrderKind::DegLex;
  std::vector<Polynomial> polys;
};

struct NcIdealFile {
  std::size_t nvars = 0;
  PrimeField field;
  std::string section;  // empty when the file has no section line
  std::vector<NcPolynomial> polys;
};

/// `prime_override` replaces the header prime (or the 32003 default).
IdealFile read_ideal(std::istream& in, std::optional<Coeff> prime_override = std::nullopt);
void write_ideal(std::ostream& out, const IdealFile& f);
IdealFile read_ideal_file(const std::string& path, std::optional<Coeff> prime_override = std::nullopt);

NcIdealFile read_nc_ideal(std::istream& in, std::optional<Coeff> prime_override = std::nullopt);
void write_nc_ideal(std::ostream& out, const NcIdealFile& f);
NcIdealFile read_nc_ideal_file(const std::string& path, std::optional<Coeff> prime_override = std::nullopt);

/// True when the first header word is `free`.
bool is_nc_file(const std::string& path);

void write_result(std::ostream& out, const StaircaseResult& r, const TermOrder& render);

struct ResultFile {
  Exponent bound = 0;
  std::vector<Term> generators;
  std::vector<Polynomial> basis;
  std::size_t queries = 0;
};
ResultFile read_result(std::istream& in, std::size_t nvars, const PrimeField& field);

void write_public_key(std::ostream& out, const PublicKey& pub);
PublicKey read_public_key(std::istream& in);
PublicKey read_public_key_file(const std::string& path);

void write_private_key(std::ostream& out, const PrivateKey& key);
PrivateKey read_private_key_file(const std::string& path);

void write_ciphers(std::ostream& out, std::size_t nvars, const PrimeField& field, const std::vector<Polynomial>& cs);
std::vector<Polynomial> read_ciphers(std::istream& in, std::size_t& nvars, PrimeField& field);
std::vector<Polynomial> read_ciphers_file(const std::string& path, std::size_t& nvars, PrimeField& field);

void write_bound_report(std::ostream& out, const ForgeOutput& f, const BoundReport& r);

}  // namespace escalier
