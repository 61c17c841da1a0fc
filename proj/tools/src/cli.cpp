#include "fibfield/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fibfield/ffield.hpp"
#include "fibfield/fibgen.hpp"
#include "fibfield/fqfunc.hpp"
#include "fibfield/intpoly.hpp"
#include "fibfield/moments.hpp"
#include "fibfield/numtheory.hpp"
#include "fibfield/report_io.hpp"

namespace fibfield::cli {

namespace {

using nlohmann::json;

struct Config {
  std::int64_t n = 0;
  std::uint64_t p = 0;
  unsigned e = 1;
  std::uint64_t n_max = 0;
  std::optional<std::string> mod;
  unsigned power = 1;
  std::optional<std::uint64_t> count;
  std::string format = "text";
  std::string out_path;
  std::string a = "-1";
  std::uint64_t k = 1;
  unsigned threads = 1;
  std::uint64_t max_q = FieldCtx::kDefaultMaxQ;
};

/// Thrown for bad parameters detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpz_class parse_integer(const std::string& text, const char* what) {
  mpz_class v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError(std::string("invalid ") + what + ": " + text);
  return v;
}

std::optional<mpz_class> modulus_of(const Config& c) {
  if (!c.mod) return std::nullopt;
  const mpz_class m = parse_integer(*c.mod, "--mod");
  if (m == 0) return std::nullopt;
  if (m < 0 || !m.fits_ulong_p() || !is_prime(m.get_ui())) throw UsageError("--mod must be 0 or a prime");
  return m;
}

FieldHandle field_of(const Config& c) {
  if (c.p > UINT32_MAX) throw UsageError("--p too large");
  if (c.p < 2 || !is_prime(c.p)) throw UsageError("--p must be prime");
  return make_field(static_cast<std::uint32_t>(c.p), c.e, c.max_q);
}

json element_json(const FqElem& a) {
  if (a.code() < a.ctx().p()) return a.code();
  return to_string(a);
}

json coeffs_json(const IntPoly& poly) {
  json arr = json::array();
  for (const auto& c : poly.coeffs()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

int emit_poly(const Config& c, const IntPoly& poly, json record, std::ostream& out) {
  if (c.format == "json") {
    record["poly"] = to_string(poly);
    record["coeffs"] = coeffs_json(poly);
    out << record.dump() << '\n';
  } else if (c.format == "csv") {
    out << "k,coeff\n";
    for (std::size_t k = 0; k < poly.coeffs().size(); ++k) out << k << ',' << poly.coeffs()[k].get_str() << '\n';
  } else {
    out << to_string(poly) << '\n';
  }
  return kOk;
}

int cmd_fib(const Config& c, std::ostream& out) {
  const auto m = modulus_of(c);
  IntPoly poly = fib_poly_recurrence(c.n);
  if (m) poly = reduce_mod(poly, *m);
  json rec{{"n", c.n}, {"mod", m ? json(m->get_ui()) : json(nullptr)}};
  return emit_poly(c, poly, rec, out);
}

int cmd_dickson(const Config& c, std::ostream& out) {
  if (c.n < 0) throw UsageError("--n must be nonnegative");
  const auto m = modulus_of(c);
  const mpz_class a = parse_integer(c.a, "--a");
  IntPoly poly = dickson_kind(static_cast<std::uint64_t>(c.n), c.k, a);
  if (m) poly = reduce_mod(poly, *m);
  json rec{{"n", c.n}, {"k", c.k}, {"a", c.a}, {"mod", m ? json(m->get_ui()) : json(nullptr)}};
  return emit_poly(c, poly, rec, out);
}

int cmd_selfrec(const Config& c, std::ostream& out) {
  if (c.n_max == 0) throw UsageError("--nmax must be positive");
  if (c.p != 0 && !is_prime(c.p)) throw UsageError("--p must be 0 or a prime");
  const ScanReport r = selfreciprocal_scan(c.p, c.n_max, ScanOptions{std::max(1u, c.threads)});
  if (c.format == "json") {
    out << scan_report_to_jsonl(r);
    return kOk;
  }
  if (c.format == "csv") {
    out << "n,degree,factorization,trivial,family,flagged\n";
    for (const auto& h : r.factored_hits) {
      out << h.n << ',' << h.degree << ',' << to_string(h.factorization) << ',' << (h.trivial ? "true" : "false")
          << ',' << h.family.value_or("") << ',' << (h.flagged ? "true" : "false") << '\n';
    }
    return kOk;
  }
  for (const auto& h : r.factored_hits) {
    out << "n=" << h.n << " degree=" << h.degree << " factorization=" << to_string(h.factorization);
    if (h.trivial) out << " trivial";
    if (h.family) out << " family=" << *h.family;
    if (h.flagged) out << " FLAGGED";
    out << '\n';
  }
  out << "p=" << r.p << " nmax=" << r.n_max << " hits=" << r.hits.size()
      << " nontrivial=" << r.nontrivial_hits().size() << " flagged=" << r.flagged_hits().size() << '\n';
  return kOk;
}

int cmd_period(const Config& c, std::ostream& out) {
  const auto f = field_of(c);
  const PeriodClaim claim = period_modulus(*f);
  const std::uint64_t n_lo = c.n > 0 ? static_cast<std::uint64_t>(c.n) : 1;
  const std::uint64_t count = c.count.value_or(std::min<std::uint64_t>(claim.modulus, 50));
  if (count == 0) throw UsageError("--count must be positive");
  const bool ok = verify_period(f, n_lo, count);
  if (c.format == "json") {
    out << json{{"field", f->to_string()}, {"q", f->q()},          {"case", to_string(claim.tag)},
                {"modulus", claim.modulus}, {"n_lo", n_lo},          {"count", count},
                {"ok", ok}}
               .dump()
        << '\n';
  } else if (c.format == "csv") {
    out << "q,p,e,case,modulus,n_lo,count,ok\n"
        << f->q() << ',' << f->p() << ',' << f->e() << ',' << to_string(claim.tag) << ',' << claim.modulus << ','
        << n_lo << ',' << count << ',' << (ok ? "true" : "false") << '\n';
  } else {
    out << f->to_string() << " case " << to_string(claim.tag) << " n=" << n_lo << ".." << n_lo + count - 1
        << '\n'
        << "modulus " << claim.modulus << ": " << (ok ? "OK" : "FAIL") << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int moments_odd(const Config& c, const FieldHandle& f, std::ostream& out) {
  if (c.power != 1) {
    const PeriodClaim claim = period_modulus(*f);
    const auto d = d_oracle(f, c.power);
    if (c.format == "json") {
      for (std::uint64_t n = 1; n < d.size(); ++n) {
        out << json{{"n", n}, {"d_oracle", element_json(d[n])}}.dump() << '\n';
      }
      return kOk;
    }
    out << "# q=" << f->q() << " p=" << f->p() << " e=" << f->e() << " power=" << c.power
        << " period=" << claim.modulus << '\n'
        << "n,d_oracle\n";
    for (std::uint64_t n = 1; n < d.size(); ++n) out << n << ',' << render_value(d[n]) << '\n';
    return kOk;
  }
  const MomentSeries s = cross_validate(f);
  if (c.format == "json") {
    for (std::uint64_t n = 1; n <= s.period; ++n) {
      out << json{{"n", n},
                  {"d_recur", element_json(s.d_recur[n])},
                  {"d_oracle", element_json(s.d_oracle[n])},
                  {"agree", static_cast<bool>(s.agree[n])}}
                 .dump()
          << '\n';
    }
    const auto first = s.first_disagreement();
    out << json{{"summary",
                 {{"q", f->q()},
                  {"case", to_string(s.tag)},
                  {"period", s.period},
                  {"all_agree", s.all_agree()},
                  {"first_disagreement", first ? json(*first) : json(nullptr)}}}}
               .dump()
        << '\n';
  } else {
    out << moment_series_to_csv(s);
  }
  return s.all_agree() ? kOk : kVerificationFailed;
}

int moments_even(const Config& c, const FieldHandle& f, std::ostream& out) {
  const EvenQReport r = even_q_relations_check(f, c.power);
  if (c.format == "json") {
    out << even_q_report_to_jsonl(r);
  } else if (c.format == "csv") {
    out << "# q=" << f->q() << " p=2 e=" << f->e() << " case=CHAR2 power=" << c.power << " period=" << r.period
        << '\n'
        << "n,d_oracle\n";
    for (std::uint64_t n = 1; n <= r.period; ++n) out << n << ',' << render_value(r.d[n]) << '\n';
  } else {
    out << f->to_string() << " power " << c.power << " period " << r.period << '\n';
    for (const auto& id : r.identities) {
      out << id.name << ": " << (id.holds ? "holds" : "fails") << " (lhs " << to_string(id.lhs) << ", rhs "
          << to_string(id.rhs) << ")\n";
    }
    out << "nonzero d_j for 1 < j < " << r.period << ":";
    for (auto j : r.otherwise_zero_violations) out << ' ' << j;
    out << '\n' << "generating identity: " << (r.generating_identity_holds ? "holds" : "fails");
    if (!r.generating_identity_holds) {
      out << " at z^";
      bool first = true;
      for (const auto& t : r.generating_terms) {
        if (t.holds) continue;
        out << (first ? "" : ",") << t.power;
        first = false;
      }
    }
    out << '\n' << "periodic: " << (r.periodic ? "yes" : "no") << '\n';
    if (r.matches_first_moment) {
      out << "matches first moment: " << (*r.matches_first_moment ? "yes" : "no") << '\n';
    }
  }
  return r.periodic ? kOk : kVerificationFailed;
}

int cmd_moments(const Config& c, std::ostream& out) {
  if (c.power == 0) throw UsageError("--power must be positive");
  const auto f = field_of(c);
  return f->p() == 2 ? moments_even(c, f, out) : moments_odd(c, f, out);
}

int cmd_permscan(const Config& c, std::ostream& out) {
  if (c.n_max == 0) throw UsageError("--nmax must be positive");
  const auto f = field_of(c);
  FibValueSequence seq(f);
  bool ok = true;
  std::uint64_t found = 0;
  if (c.format == "csv") out << "n,first_moment\n";
  for (std::uint64_t n = 1; n <= c.n_max; ++n) {
    seq.advance();
    if (!is_permutation(seq.values())) continue;
    ++found;
    const FqElem d = power_sum(seq.values(), 1);
    if (f->q() > 2 && !d.is_zero()) ok = false;
    if (c.format == "json") {
      out << json{{"n", n}, {"first_moment", element_json(d)}}.dump() << '\n';
    } else if (c.format == "csv") {
      out << n << ',' << render_value(d) << '\n';
    } else {
      out << "n=" << n << " first_moment=" << to_string(d) << '\n';
    }
  }
  if (c.format == "json") {
    out << json{{"summary", {{"q", f->q()}, {"nmax", c.n_max}, {"permutations", found}, {"ok", ok}}}}.dump()
        << '\n';
  } else if (c.format == "text") {
    out << f->to_string() << " nmax=" << c.n_max << " permutations=" << found << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_funcexpr(const Config& c, std::ostream& out) {
  const std::uint64_t n_max = c.n > 0 ? static_cast<std::uint64_t>(c.n) : 30;
  const auto f = field_of(c);
  const auto ext = embed_quadratic(f, c.max_q);
  std::vector<std::uint64_t> failures;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (!functional_expression_check(ext, n)) failures.push_back(n);
  }
  const bool ok = failures.empty();
  if (c.format == "json") {
    out << json{{"field", f->to_string()}, {"n_max", n_max}, {"failures", failures}, {"ok", ok}}.dump() << '\n';
  } else {
    out << f->to_string() << " n=1.." << n_max << ": " << (ok ? "OK" : "FAIL");
    for (auto n : failures) out << ' ' << n;
    out << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_series(const Config& c, std::ostream& out) {
  const std::size_t terms = c.n > 0 ? static_cast<std::size_t>(c.n) : 50;
  const auto m = modulus_of(c);
  const bool ok = generating_series_check(terms, m);
  if (c.format == "json") {
    out << json{{"terms", terms}, {"mod", m ? json(m->get_ui()) : json(nullptr)}, {"ok", ok}}.dump() << '\n';
  } else {
    out << "series terms=" << terms << ": " << (ok ? "OK" : "FAIL") << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

void add_format(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", c.out_path, "Write output to a file");
}

void add_field(CLI::App* sub, Config& c) {
  sub->add_option("--p", c.p, "Characteristic")->required();
  sub->add_option("--e", c.e, "Extension degree")->check(CLI::PositiveNumber);
}

}  // namespace

std::uint64_t max_q_from_env(const char* value) {
  if (value == nullptr || *value == '\0') return FieldCtx::kDefaultMaxQ;
  std::uint64_t v = 0;
  std::istringstream in(value);
  if (!(in >> v) || !in.eof() || v < 2) {
    throw std::invalid_argument(std::string("FIBFIELD_MAX_Q must be an integer >= 2, got ") + value);
  }
  return std::min<std::uint64_t>(v, FieldCtx::kHardMaxQ);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::uint64_t max_q) {
  Config c;
  c.max_q = max_q;
  CLI::App app{"Fibonacci polynomials over the integers and finite fields", "fibfield"};
  app.require_subcommand(1);

  auto* fib = app.add_subcommand("fib", "Print f_n over Z or mod a prime");
  fib->add_option("n,--n", c.n, "Index")->required();
  fib->add_option("--mod", c.mod, "Reduce coefficients mod a prime");
  add_format(fib, c);

  auto* dickson = app.add_subcommand("dickson", "Print the Dickson polynomial D_{n,k}(x, a)");
  dickson->add_option("n,--n", c.n, "Index")->required();
  dickson->add_option("--a", c.a, "Parameter a (default -1)");
  dickson->add_option("--k", c.k, "Kind offset: 0 first kind, 1 second kind (default 1)");
  dickson->add_option("--mod", c.mod, "Reduce coefficients mod a prime");
  add_format(dickson, c);

  auto* selfrec = app.add_subcommand("selfrec", "Self-reciprocal scan of f_1..f_nmax");
  selfrec->add_option("--p", c.p, "0 for Z, otherwise a prime")->required();
  selfrec->add_option("--nmax", c.n_max, "Largest index")->required();
  selfrec->add_option("--threads", c.threads, "Worker threads");
  add_format(selfrec, c);

  auto* period = app.add_subcommand("period", "Check functional periodicity over GF(p^e)");
  add_field(period, c);
  period->add_option("--count", c.count, "Number of indices to check (default min(modulus, 50))");
  period->add_option("--n", c.n, "First index (default 1)");
  add_format(period, c);

  auto* moments = app.add_subcommand("moments", "Moment tables over GF(p^e)");
  add_field(moments, c);
  moments->add_option("--power", c.power, "Exponent i in sum f_n(x)^i (default 1)");
  add_format(moments, c);

  auto* permscan = app.add_subcommand("permscan", "List n <= nmax with f_n permuting GF(p^e)");
  add_field(permscan, c);
  permscan->add_option("--nmax", c.n_max, "Largest index")->required();
  add_format(permscan, c);

  auto* funcexpr = app.add_subcommand("funcexpr-check", "Check the closed forms for f_{n+1} at every x");
  add_field(funcexpr, c);
  funcexpr->add_option("--n", c.n, "Largest n (default 30)");
  add_format(funcexpr, c);

  auto* series = app.add_subcommand("series-check", "Compare the generating function with the recurrence");
  series->add_option("--n", c.n, "Number of terms (default 50)");
  series->add_option("--mod", c.mod, "Compare mod a prime");
  add_format(series, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (fib->parsed()) code = cmd_fib(c, buffer);
    else if (dickson->parsed()) code = cmd_dickson(c, buffer);
    else if (selfrec->parsed()) code = cmd_selfrec(c, buffer);
    else if (period->parsed()) code = cmd_period(c, buffer);
    else if (moments->parsed()) code = cmd_moments(c, buffer);
    else if (permscan->parsed()) code = cmd_permscan(c, buffer);
    else if (funcexpr->parsed()) code = cmd_funcexpr(c, buffer);
    else if (series->parsed()) code = cmd_series(c, buffer);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  }

  if (c.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(c.out_path, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "error: cannot write " << c.out_path << '\n';
      return kUsageError;
    }
  }
  return code;
}

}  // namespace fibfield::cli
