// erseq — command-line toolkit for the arithmetic of periodic-orbit counting.
//
// Exit codes: 0 success (or a passing check), 1 verdict failure (check,
// classify, orbit, quot), 2 usage or domain errors. Machine-readable verdict
// lines are frozen; see README.md.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "erseq/algebra.hpp"
#include "erseq/generators.hpp"
#include "erseq/oracle.hpp"
#include "erseq/rategrowth.hpp"
#include "erseq/recurrence.hpp"
#include "erseq/seqio.hpp"
#include "erseq/transforms.hpp"

namespace {

using namespace erseq;
using seqio::Format;

struct IoOptions {
  std::string in_path;   // empty = stdin
  std::string out_path;  // empty = stdout
  std::string format = "csv";

  Format fmt() const { return format == "bfile" ? Format::bfile : Format::csv; }
};

void add_format_option(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--format", io.format, "Sequence file format")
      ->check(CLI::IsMember({"csv", "bfile"}))
      ->capture_default_str();
}

void add_out_options(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--out", io.out_path, "Write output to FILE instead of stdout");
  add_format_option(cmd, io);
}

void add_io_options(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--in", io.in_path, "Read the input sequence from FILE instead of stdin");
  add_out_options(cmd, io);
}

std::string slurp(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(const IoOptions& io, const std::string& text) {
  if (io.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(io.out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + io.out_path);
  file << text;
}

Sequence read_sequence(const IoOptions& io) {
  return seqio::parse_sequence(slurp(io.in_path), io.fmt());
}

Sequence read_sequence_file(const std::string& path, const IoOptions& io) {
  return seqio::parse_sequence(slurp(path), io.fmt());
}

const char* reason_name(FailReason reason) {
  return reason == FailReason::negative ? "negative" : "not-divisible";
}

std::string fail_line(const Witness& w) {
  return "FAIL n=" + std::to_string(w.index) + " reason=" + reason_name(w.reason) +
         " s=" + w.mobius_sum.get_str() + "\n";
}

std::string verdict_machine_line(const ERVerdict& v, std::size_t n_terms) {
  if (v.pass) return "ER-CONSISTENT N=" + std::to_string(n_terms) + "\n";
  return fail_line(*v.witness);
}

MatrixSpec parse_matrix_spec(const std::string& text, MatrixKind kind) {
  auto [dim, entries] = seqio::parse_matrix(text);
  return MatrixSpec(dim, std::move(entries), kind);
}

// Shared state for the command that ends up running.
int run_check(const IoOptions& io) {
  const Sequence a = read_sequence(io);
  const ERVerdict v = check_er(a);
  std::ostringstream out;
  if (v.pass) {
    out << "prefix of length " << a.size() << " is consistent with ER up to N=" << a.size()
        << "\n";
  } else {
    out << "ER congruence fails at n=" << v.witness->index << ": mobius sum "
        << v.witness->mobius_sum << " is "
        << (v.witness->reason == FailReason::negative ? "negative" : "not divisible by n")
        << "\n";
  }
  out << verdict_machine_line(v, a.size());
  emit(io, out.str());
  return v.pass ? 0 : 1;
}

int run_sequence_map(const IoOptions& io, const std::function<Sequence(const Sequence&)>& fn) {
  const Sequence result = fn(read_sequence(io));
  emit(io, seqio::render_sequence(result, io.fmt()));
  return 0;
}

int run_orbit(const IoOptions& io) {
  const ERVerdict v = orbit_transform(read_sequence(io));
  if (!v.pass) {
    emit(io, fail_line(*v.witness));
    return 1;
  }
  emit(io, seqio::render_sequence(v.orbit_counts, io.fmt()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic of periodic-orbit counting: Moebius transforms, exact realizability "
               "checks, realizing systems, and growth diagnostics"};
  app.require_subcommand(1);

  std::function<int()> action;
  IoOptions io;

  // --- per / orbit / fstar / check ------------------------------------
  {
    CLI::App* per = app.add_subcommand("per", "Orbit counts -> periodic point counts");
    add_io_options(per, io);
    per->callback([&] { action = [&] { return run_sequence_map(io, [](const Sequence& s) { return per_transform(s); }); }; });

    CLI::App* orbit = app.add_subcommand(
        "orbit", "Periodic point counts -> orbit counts (fails when not realizable)");
    add_io_options(orbit, io);
    orbit->callback([&] { action = [&] { return run_orbit(io); }; });

    CLI::App* fstar =
        app.add_subcommand("fstar", "Periodic point counts -> least-period counts");
    add_io_options(fstar, io);
    fstar->callback([&] { action = [&] { return run_sequence_map(io, [](const Sequence& s) { return least_period_counts(s); }); }; });

    CLI::App* chk = app.add_subcommand("check", "Exact-realizability congruence check");
    add_io_options(chk, io);
    chk->callback([&] { action = [&] { return run_check(io); }; });
  }

  // --- gen -------------------------------------------------------------
  {
    CLI::App* gen = app.add_subcommand("gen", "Generate a realizing system's sequence");
    gen->require_subcommand(1);
    static std::string matrix_text;
    static std::size_t n_terms = 10;
    static Integer binom_k, binom_j;
    static std::string xi_text = "2";
    static std::string s_text;
    static std::string named_name;
    static std::optional<std::string> named_param;

    const auto add_terms = [&](CLI::App* cmd) {
      cmd->add_option("--terms", n_terms, "Number of terms")->capture_default_str();
    };

    CLI::App* sft = gen->add_subcommand("sft", "Subshift of finite type: trace(A^n)");
    sft->add_option("--matrix", matrix_text, "Row-major matrix, e.g. \"1,1;1,0\"")->required();
    add_terms(sft);
    add_out_options(sft, io);
    sft->callback([&] {
      action = [&] {
        const Sequence s =
            gen_sft_trace(parse_matrix_spec(matrix_text, MatrixKind::nonneg), n_terms);
        emit(io, seqio::render_sequence(s, io.fmt()));
        return 0;
      };
    });

    CLI::App* toral = gen->add_subcommand("toral", "Toral automorphism: |det(A^n - I)|");
    toral->add_option("--matrix", matrix_text, "Row-major unimodular matrix")->required();
    add_terms(toral);
    add_out_options(toral, io);
    toral->callback([&] {
      action = [&] {
        const Sequence s =
            gen_toral_det(parse_matrix_spec(matrix_text, MatrixKind::invertible), n_terms);
        emit(io, seqio::render_sequence(s, io.fmt()));
        return 0;
      };
    });

    CLI::App* binom = gen->add_subcommand("binom", "Binomial family: C(k n, j n)");
    binom->add_option("--k", binom_k)->required();
    binom->add_option("--j", binom_j)->required();
    add_terms(binom);
    add_out_options(binom, io);
    binom->callback([&] {
      action = [&] {
        const Sequence s = gen_binomial(BinomialSpec(binom_k, binom_j), n_terms);
        emit(io, seqio::render_sequence(s, io.fmt()));
        return 0;
      };
    });

    CLI::App* sint = gen->add_subcommand(
        "sint", "Connected S-integer system: prod over places of |xi^n - 1|_p");
    sint->add_option("--xi", xi_text, "Rational xi, e.g. 2 or -3/2")->required();
    sint->add_option("--S", s_text, "Comma-separated primes, e.g. \"2,3,5\"");
    add_terms(sint);
    add_out_options(sint, io);
    sint->callback([&] {
      action = [&] {
        const SIntegerSpec spec(seqio::parse_rational(xi_text),
                                seqio::parse_integer_list(s_text));
        emit(io, seqio::render_sequence(gen_s_integer_connected(spec, n_terms), io.fmt()));
        return 0;
      };
    });

    CLI::App* sint0 =
        gen->add_subcommand("sint0", "Zero-dimensional S-integer example: 2^(n - 2^ord_2(n))");
    add_terms(sint0);
    add_out_options(sint0, io);
    sint0->callback([&] {
      action = [&] {
        emit(io, seqio::render_sequence(gen_s_integer_zero_dim_example(n_terms), io.fmt()));
        return 0;
      };
    });

    CLI::App* named = gen->add_subcommand("named", "Named families");
    named->add_option("--name", named_name, "constant|power|r_k|r_product|alt_prime")
        ->required()
        ->check(CLI::IsMember({"constant", "power", "r_k", "r_product", "alt_prime"}));
    static std::string param_text;
    CLI::Option* param_opt = named->add_option("--param", param_text, "c for constant/power, k for r_k");
    add_terms(named);
    add_out_options(named, io);
    named->callback([&, param_opt] {
      named_param = param_opt->count() > 0 ? std::optional<std::string>(param_text) : std::nullopt;
      action = [&] {
        NamedKind kind;
        if (named_name == "constant") kind = NamedKind::constant;
        else if (named_name == "power") kind = NamedKind::power;
        else if (named_name == "r_k") kind = NamedKind::r_k;
        else if (named_name == "r_product") kind = NamedKind::r_product;
        else kind = NamedKind::alt_prime;
        std::optional<Integer> param;
        if (named_param) param = Integer(*named_param);
        emit(io, seqio::render_sequence(gen_named(kind, param, n_terms), io.fmt()));
        return 0;
      };
    });
  }

  // --- iterate ----------------------------------------------------------
  {
    CLI::App* iterate = app.add_subcommand("iterate", "Iterated orbit-counting table");
    static std::size_t steps = 1;
    static std::size_t n_terms = 10;
    static std::string start_path;
    static bool use_delta = false;
    iterate->add_option("--steps", steps, "Number of applications")->required();
    iterate->add_option("--terms", n_terms, "Number of terms per row")->capture_default_str();
    CLI::Option* start_opt =
        iterate->add_option("--start", start_path, "Starting orbit counts (sequence file)");
    iterate->add_flag("--delta", use_delta, "Start from 1,0,0,...")->excludes(start_opt);
    add_out_options(iterate, io);
    iterate->callback([&] {
      action = [&] {
        Sequence start;
        if (use_delta) {
          start = Sequence::delta(n_terms);
        } else if (!start_path.empty()) {
          start = read_sequence_file(start_path, io).prefix(n_terms);
        } else {
          throw std::domain_error("iterate: give either --delta or --start FILE");
        }
        std::ostringstream out;
        for (const Sequence& row : iterate_per(start, steps)) out << row << '\n';
        emit(io, out.str());
        return 0;
      };
    });
  }

  // --- classify ----------------------------------------------------------
  {
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Classify a binary recurrence u_{n+2} = a u_{n+1} + b u_n");
    static Integer a, b, u1, u2;
    static std::size_t n_terms = 24;
    classify_cmd->add_option("--a", a)->required();
    classify_cmd->add_option("--b", b)->required();
    classify_cmd->add_option("--u1", u1)->required();
    classify_cmd->add_option("--u2", u2)->required();
    classify_cmd->add_option("--terms", n_terms, "Empirical prefix length")->capture_default_str();
    classify_cmd->add_option("--out", io.out_path, "Write output to FILE instead of stdout");
    classify_cmd->callback([&] {
      action = [&] {
        const RecurrenceVerdict v = classify(RecurrenceSpec(a, b, u1, u2), n_terms);
        std::ostringstream out;
        switch (v.applicability) {
          case Applicability::theorem_applies: out << "applicability=theorem-applies\n"; break;
          case Applicability::square_discriminant: out << "applicability=square-discriminant\n"; break;
          case Applicability::common_factor: out << "applicability=common-factor\n"; break;
        }
        if (v.decision)
          out << "decision=" << (*v.decision == Decision::in_er ? "in-ER" : "not-in-ER") << "\n";
        else
          out << "decision=none\n";
        out << "witness-prime=" << (v.witness_prime ? v.witness_prime->get_str() : "none") << "\n";
        if (v.witness_search_capped)
          out << "note=witness search capped at " << witness_prime_cap << " primes\n";
        out << "empirical=" << verdict_machine_line(v.empirical, n_terms);
        emit(io, out.str());
        const bool failed = (v.decision && *v.decision == Decision::not_in_er) ||
                            (!v.decision && !v.empirical.pass);
        return failed ? 1 : 0;
      };
    });
  }

  // --- family -------------------------------------------------------------
  {
    CLI::App* family_cmd =
        app.add_subcommand("family", "Square-discriminant ratio families (t, s combinations)");
    static std::string name;
    static Integer t, s;
    static std::size_t n_terms = 10;
    family_cmd->add_option("--name", name)->required()->check(CLI::IsMember({"jacobsthal", "mersenne"}));
    family_cmd->add_option("--t", t)->required();
    family_cmd->add_option("--s", s)->required();
    family_cmd->add_option("--terms", n_terms)->capture_default_str();
    add_io_options(family_cmd, io);
    family_cmd->callback([&] {
      action = [&] {
        const RatioFamily fam = name == "jacobsthal" ? RatioFamily::jacobsthal : RatioFamily::mersenne;
        emit(io, seqio::render_sequence(ratio_family(fam, t, s, n_terms), io.fmt()));
        return 0;
      };
    });
  }

  // --- conv / quot ----------------------------------------------------------
  {
    CLI::App* conv = app.add_subcommand("conv", "Additive or Dirichlet convolution of two files");
    static std::string mode = "additive";
    static std::string a_path, b_path;
    conv->add_option("--mode", mode)->check(CLI::IsMember({"additive", "dirichlet"}))->capture_default_str();
    conv->add_option("A", a_path, "First sequence file")->required();
    conv->add_option("B", b_path, "Second sequence file")->required();
    conv->add_option("--out", io.out_path, "Write output to FILE instead of stdout");
    add_format_option(conv, io);
    conv->callback([&] {
      action = [&] {
        const Sequence a = read_sequence_file(a_path, io);
        const Sequence b = read_sequence_file(b_path, io);
        const Sequence r =
            mode == "additive" ? additive_convolution(a, b) : dirichlet_convolution(a, b);
        emit(io, seqio::render_sequence(r, io.fmt()));
        return 0;
      };
    });

    CLI::App* quot = app.add_subcommand("quot", "Termwise quotient A/B when it stays integral");
    static std::string qa_path, qb_path;
    quot->add_option("A", qa_path, "Numerator sequence file")->required();
    quot->add_option("B", qb_path, "Divisor sequence file")->required();
    quot->add_option("--out", io.out_path, "Write output to FILE instead of stdout");
    add_format_option(quot, io);
    quot->callback([&] {
      action = [&] {
        const QuotientResult r =
            quotient_check(read_sequence_file(qa_path, io), read_sequence_file(qb_path, io));
        if (!r.quotient) {
          emit(io, "FAIL n=" + std::to_string(*r.fail_index) + " reason=not-integral\n");
          return 1;
        }
        emit(io, seqio::render_sequence(*r.quotient, io.fmt()));
        return 0;
      };
    });
  }

  // --- factor ------------------------------------------------------------
  {
    CLI::App* factor = app.add_subcommand(
        "factor", "Search termwise factorizations a = b * c with both factors realizable");
    static std::size_t max_results = 16;
    static std::uint64_t budget = 1'000'000;
    factor->add_option("--max-results", max_results)->capture_default_str();
    factor->add_option("--budget", budget, "Search node budget")->capture_default_str();
    add_io_options(factor, io);
    factor->callback([&] {
      action = [&] {
        const FactorizationResult r = search_factorizations(read_sequence(io), max_results, budget);
        std::ostringstream out;
        for (const auto& [b, c] : r.pairs) out << "PAIR " << b << " x " << c << "\n";
        out << "RESULT pairs=" << r.pairs.size() << " search="
            << (!r.complete ? "budget-exhausted" : (r.truncated ? "result-limit" : "complete"))
            << "\n";
        emit(io, out.str());
        return 0;
      };
    });
  }

  // --- refuters -------------------------------------------------------------
  {
    CLI::App* poly = app.add_subcommand("refute-poly", "Witness that a polynomial is not realizable");
    static std::string coeffs_text;
    static std::size_t bound = 100;
    poly->add_option("--coeffs", coeffs_text, "c0,c1,... (constant term first)")->required();
    poly->add_option("--bound", bound)->capture_default_str();
    poly->add_option("--out", io.out_path, "Write output to FILE instead of stdout");
    poly->callback([&] {
      action = [&] {
        const auto witness = refute_polynomial(seqio::parse_integer_list(coeffs_text), bound);
        emit(io, witness ? "WITNESS n=" + std::to_string(*witness) + "\n"
                         : "NO-WITNESS bound=" + std::to_string(bound) + "\n");
        return 0;
      };
    });

    CLI::App* cm = app.add_subcommand(
        "refute-cm", "Witness that a completely multiplicative sequence is not realizable");
    static std::string primes_text;
    static std::size_t cm_bound = 100;
    static Integer rest = 1;
    cm->add_option("--primes", primes_text, "prime:value pairs, e.g. \"2:3,3:1\"")->required();
    cm->add_option("--bound", cm_bound)->capture_default_str();
    cm->add_option("--rest", rest, "Value at primes not listed")->capture_default_str();
    cm->add_option("--out", io.out_path, "Write output to FILE instead of stdout");
    cm->callback([&] {
      action = [&] {
        auto values = seqio::parse_prime_value_map(primes_text);
        PrimeSieve sieve;
        for (std::uint64_t p : sieve.up_to(cm_bound)) {
          const Integer key(static_cast<unsigned long>(p));
          if (!values.count(key)) values[key] = rest;
        }
        const auto witness = refute_completely_multiplicative(values, cm_bound);
        emit(io, witness ? "WITNESS n=" + std::to_string(*witness) + "\n"
                         : "NO-WITNESS bound=" + std::to_string(cm_bound) + "\n");
        return 0;
      };
    });
  }

  // --- rr / growth / pathology ----------------------------------------------
  {
    CLI::App* rr = app.add_subcommand("rr", "Rate-realization constructions");
    static std::string alpha_text, beta_text;
    static std::size_t n_terms = 20;
    static std::string emit_mode = "per";
    CLI::Option* alpha_opt = rr->add_option("--alpha", alpha_text, "Power target floor(n^alpha), alpha > 1");
    rr->add_option("--beta", beta_text, "Geometric target floor(beta^n), beta >= 1")->excludes(alpha_opt);
    rr->add_option("--terms", n_terms)->capture_default_str();
    rr->add_option("--emit", emit_mode)->check(CLI::IsMember({"orbits", "per", "both"}))->capture_default_str();
    add_out_options(rr, io);
    rr->callback([&] {
      action = [&] {
        if (alpha_text.empty() == beta_text.empty())
          throw std::domain_error("rr: give exactly one of --alpha or --beta");
        const RateRealization r = !alpha_text.empty()
                                      ? rr_construct_power(seqio::parse_rational(alpha_text), n_terms)
                                      : rr_construct_geometric(seqio::parse_rational(beta_text), n_terms);
        std::ostringstream out;
        if (emit_mode == "orbits" || emit_mode == "both")
          out << seqio::render_sequence(r.orbit_counts, io.fmt());
        if (emit_mode == "per" || emit_mode == "both")
          out << seqio::render_sequence(r.per_counts, io.fmt());
        emit(io, out.str());
        return 0;
      };
    });

    CLI::App* growth = app.add_subcommand("growth", "Scaled growth statistics of a sequence");
    static std::string g_alpha = "2";
    static std::string rows_mode = "tagged";
    growth->add_option("--alpha", g_alpha, "Scaling exponent alpha = p/q")->capture_default_str();
    growth->add_option("--rows", rows_mode)->check(CLI::IsMember({"all", "tagged"}))->capture_default_str();
    add_io_options(growth, io);
    growth->callback([&] {
      action = [&] {
        const Rational alpha = seqio::parse_rational(g_alpha);
        const GrowthReport report = growth_report(read_sequence(io), alpha);
        std::ostringstream out;
        out << "# n f fstar tags f/n^alpha (1/n)log(f)\n";
        for (const GrowthRow& row : report.rows) {
          std::string tags;
          if (row.prime) tags = "prime";
          if (row.prime_power) tags = "prime-power";
          if (row.semiprime) tags = "semiprime";
          if (rows_mode == "tagged" && tags.empty()) continue;
          if (tags.empty()) tags = "-";
          out << row.n << ' ' << row.f << ' ' << row.fstar << ' ' << tags << ' '
              << format_power_ratio(row.f, row.n, alpha) << ' '
              << format_log_rate(row.f, row.n) << "\n";
        }
        emit(io, out.str());
        return 0;
      };
    });

    CLI::App* pathology =
        app.add_subcommand("pathology", "Least-period counts with wild log-growth statistics");
    static std::size_t k_bound = 16;
    pathology->add_option("--k", k_bound, "Index bound (terms reach 2^(k^3))")->capture_default_str();
    add_out_options(pathology, io);
    pathology->callback([&] {
      action = [&] {
        emit(io, seqio::render_sequence(gen_pathological_orbit_growth(k_bound), io.fmt()));
        return 0;
      };
    });
  }

  // --- oracle -----------------------------------------------------------------
  {
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Build the permutation for given orbit counts and recount fixed points");
    static std::string orbits_path;
    static std::size_t n_terms = 0;
    oracle->add_option("--orbits", orbits_path, "Orbit-count sequence file")->required();
    oracle->add_option("--terms", n_terms, "How many k to recount (default: input length)");
    add_out_options(oracle, io);
    oracle->callback([&] {
      action = [&] {
        const Sequence orbits = read_sequence_file(orbits_path, io);
        const PermutationMap map = build_permutation(orbits);
        const std::size_t upto = n_terms == 0 ? orbits.size() : n_terms;
        std::vector<Integer> counts;
        counts.reserve(upto);
        for (std::size_t k = 1; k <= upto; ++k)
          counts.push_back(Integer(static_cast<unsigned long>(count_fixed_points(map, k))));
        emit(io, seqio::render_sequence(Sequence(std::move(counts)), io.fmt()));
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const seqio::ParseError& e) {
    std::cerr << "erseq: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "erseq: " << e.what() << "\n";
    return 2;
  }
}
