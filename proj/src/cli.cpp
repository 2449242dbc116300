#include "cfrac/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cfrac/finite_cf.hpp"
#include "cfrac/iteration.hpp"
#include "cfrac/notation.hpp"
#include "cfrac/pell.hpp"
#include "cfrac/rational.hpp"
#include "cfrac/surd.hpp"

namespace cfrac::cli {
namespace {

using nlohmann::json;

enum class Format { Plain, Csv, Json };

struct Context {
  unsigned digits = 3;
  Format format = Format::Plain;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
};

json rational_json(const Rational& r) {
  return {{"numerator", r.numerator().get_str()}, {"denominator", r.denominator().get_str()}};
}

json terms_json(const std::vector<BigInt>& terms) {
  json out = json::array();
  for (const BigInt& t : terms) out.push_back(t.get_str());
  return out;
}

json terms_json(const FiniteCF& cf) {
  return terms_json(std::vector<BigInt>(cf.coefficients().begin(), cf.coefficients().end()));
}

json periodic_json(const PeriodicCF& cf) {
  return {{"pre_period", terms_json(cf.pre_period())},
          {"period", terms_json(cf.period())},
          {"text", format_cf(cf)}};
}

json surd_json(const QuadraticSurd& s) {
  return {{"P", s.P().get_str()}, {"D", s.D().get_str()}, {"Q", s.Q().get_str()}, {"text", s.str()}};
}

// A field element as text: exact rationals as p/q, irrationals as surds.
std::string exact_text(const QuadraticNumber& x) {
  if (x.is_rational()) return x.rational_part().str();
  return to_surd(x).str();
}

std::string read_notation(const Context& ctx, const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(*ctx.in), std::istreambuf_iterator<char>());
}

// Shared layout for exact traces: n,numerator,denominator,decimal.
struct TraceRow {
  std::size_t n;
  std::optional<Rational> value;  // nullopt: pole
};

void emit_trace(const Context& ctx, const std::vector<TraceRow>& rows, json header) {
  std::ostream& out = *ctx.out;
  auto decimal = [&](const TraceRow& row) {
    return row.value ? to_decimal(*row.value, ctx.digits) : std::string("inf");
  };
  switch (ctx.format) {
    case Format::Csv:
      out << "n,numerator,denominator,decimal\n";
      for (const auto& row : rows) {
        if (row.value) {
          out << row.n << ',' << row.value->numerator().get_str() << ','
              << row.value->denominator().get_str() << ',' << decimal(row) << '\n';
        } else {
          out << row.n << ",1,0,inf\n";
        }
      }
      break;
    case Format::Json: {
      json terms = json::array();
      for (const auto& row : rows) {
        json entry = {{"n", row.n}};
        if (row.value) {
          entry.update(rational_json(*row.value));
          entry["decimal"] = decimal(row);
        } else {
          entry["pole"] = true;
        }
        terms.push_back(std::move(entry));
      }
      header["terms"] = std::move(terms);
      out << header.dump(2) << '\n';
      break;
    }
    case Format::Plain:
      for (const auto& row : rows) {
        out << row.n << '\t' << (row.value ? row.value->str() : std::string("inf")) << '\t'
            << decimal(row) << '\n';
      }
      break;
  }
}

void emit_fields(const Context& ctx, const std::vector<std::pair<std::string, std::string>>& fields,
                 const std::string& plain, const json& document) {
  std::ostream& out = *ctx.out;
  switch (ctx.format) {
    case Format::Csv:
      out << "field,value\n";
      for (const auto& [key, value] : fields) out << key << ',' << value << '\n';
      break;
    case Format::Json:
      out << document.dump(2) << '\n';
      break;
    case Format::Plain:
      out << plain << '\n';
      break;
  }
}

void emit_periodic(const Context& ctx, const PeriodicCF& cf, json document) {
  std::ostream& out = *ctx.out;
  switch (ctx.format) {
    case Format::Csv: {
      out << "index,coefficient,in_period\n";
      const std::size_t pre = cf.pre_period().size();
      for (std::size_t i = 0; i < pre + cf.period().size(); ++i) {
        out << i << ',' << cf.term(i).get_str() << ',' << (i >= pre ? 1 : 0) << '\n';
      }
      break;
    }
    case Format::Json:
      document.update(periodic_json(cf));
      out << document.dump(2) << '\n';
      break;
    case Format::Plain:
      out << format_cf(cf) << '\n';
      break;
  }
}

void cmd_expand(const Context& ctx, const std::string& text) {
  const Rational value = Rational::parse(text);
  const FiniteCF cf = expand_rational(value);
  if (ctx.format == Format::Csv) {
    *ctx.out << "index,coefficient\n";
    for (std::size_t i = 0; i < cf.size(); ++i) *ctx.out << i << ',' << cf[i].get_str() << '\n';
    return;
  }
  emit_fields(ctx, {}, format_cf(cf),
              {{"rational", rational_json(value)},
               {"coefficients", terms_json(cf)},
               {"text", format_cf(cf)}});
}

void emit_surd_value(const Context& ctx, const std::string& cf_text, const QuadraticSurd& surd) {
  const std::string decimal = decimal_approx(surd, ctx.digits);
  emit_fields(ctx,
              {{"cf", cf_text},
               {"P", surd.P().get_str()},
               {"D", surd.D().get_str()},
               {"Q", surd.Q().get_str()},
               {"surd", surd.str()},
               {"decimal", decimal}},
              surd.str() + " ~ " + decimal,
              {{"cf", cf_text}, {"surd", surd_json(surd)}, {"decimal", decimal}});
}

void cmd_eval(const Context& ctx, const std::string& arg) {
  const ContinuedFraction cf = parse_cf(read_notation(ctx, arg));
  if (const auto* periodic = std::get_if<PeriodicCF>(&cf)) {
    emit_surd_value(ctx, format_cf(*periodic), periodic_to_surd(*periodic));
    return;
  }
  const FiniteCF& finite = std::get<FiniteCF>(cf);
  const Rational value = evaluate(finite);
  const std::string decimal = to_decimal(value, ctx.digits);
  emit_fields(ctx,
              {{"cf", format_cf(finite)},
               {"numerator", value.numerator().get_str()},
               {"denominator", value.denominator().get_str()},
               {"decimal", decimal}},
              value.str(),
              {{"cf", format_cf(finite)},
               {"coefficients", terms_json(finite)},
               {"value", rational_json(value)},
               {"decimal", decimal}});
}

void cmd_from_periodic(const Context& ctx, const std::string& arg) {
  const ContinuedFraction cf = parse_cf(read_notation(ctx, arg));
  const auto* periodic = std::get_if<PeriodicCF>(&cf);
  if (periodic == nullptr) {
    throw Error(ErrorKind::Syntax, "expected a periodic continued fraction such as [1;(2)]");
  }
  emit_surd_value(ctx, format_cf(*periodic), periodic_to_surd(*periodic));
}

void cmd_convergents(const Context& ctx, const std::string& arg, std::optional<std::size_t> count) {
  const ContinuedFraction cf = parse_cf(read_notation(ctx, arg));
  std::vector<BigInt> terms;
  if (const auto* finite = std::get_if<FiniteCF>(&cf)) {
    terms.assign(finite->coefficients().begin(), finite->coefficients().end());
  } else {
    terms = std::get<PeriodicCF>(cf).terms(count.value_or(10));
  }
  std::vector<TraceRow> rows;
  for (const Convergent& c : convergents(terms, count.value_or(terms.size()))) {
    rows.push_back({c.index, c.value()});
  }
  emit_trace(ctx, rows, {{"cf", format_cf(cf)}});
}

void cmd_sqrt(const Context& ctx, const std::string& n_text, std::size_t max_terms) {
  const BigInt n = parse_bigint(n_text);
  emit_periodic(ctx, sqrt_cf(n, max_terms), {{"n", n.get_str()}});
}

void cmd_surd(const Context& ctx, const std::string& p, const std::string& d, const std::string& q,
              std::size_t max_terms) {
  const QuadraticSurd surd(parse_bigint(p), parse_bigint(d), parse_bigint(q));
  const PeriodicCF cf = expand_surd(surd, max_terms);
  const std::string decimal = decimal_approx(surd, ctx.digits);
  emit_fields(ctx,
              {{"P", surd.P().get_str()},
               {"D", surd.D().get_str()},
               {"Q", surd.Q().get_str()},
               {"surd", surd.str()},
               {"conjugate", surd.conjugate().str()},
               {"cf", format_cf(cf)},
               {"decimal", decimal}},
              surd.str() + " = " + format_cf(cf) + " ~ " + decimal,
              {{"surd", surd_json(surd)},
               {"conjugate", surd_json(surd.conjugate())},
               {"expansion", periodic_json(cf)},
               {"decimal", decimal}});
}

void cmd_pell(const Context& ctx, const std::string& n_text, std::optional<std::size_t> count,
              std::optional<int> sign) {
  const BigInt n = parse_bigint(n_text);
  std::vector<PellSolution> solutions;
  if (!count && !sign) {
    solutions.push_back(solve_fundamental(n));
  } else {
    solutions = solve_signed(n, count.value_or(1), sign.value_or(1));
  }

  std::ostream& out = *ctx.out;
  switch (ctx.format) {
    case Format::Csv:
      out << "n,x,y,sign\n";
      for (const auto& s : solutions) {
        out << s.n.get_str() << ',' << s.x.get_str() << ',' << s.y.get_str() << ',' << s.sign << '\n';
      }
      break;
    case Format::Json: {
      json list = json::array();
      for (const auto& s : solutions) {
        list.push_back({{"n", s.n.get_str()}, {"x", s.x.get_str()}, {"y", s.y.get_str()}, {"sign", s.sign}});
      }
      out << json{{"n", n.get_str()}, {"solutions", list}}.dump(2) << '\n';
      break;
    }
    case Format::Plain:
      for (const auto& s : solutions) {
        out << "x=" << s.x.get_str() << " y=" << s.y.get_str() << "  x^2 - " << s.n.get_str()
            << "*y^2 = " << s.sign << '\n';
      }
      break;
  }
}

void cmd_iterate(const Context& ctx, const std::string& kappa_text, std::size_t terms,
                 const std::string& seed) {
  const BigInt kappa = parse_bigint(kappa_text);
  const Seeding seeding = seed == "paper" ? Seeding::Paper : Seeding::Recurrence;
  const IterationTrace trace = iterate_simple(kappa, terms, seeding, ctx.digits);
  std::vector<TraceRow> rows;
  for (std::size_t i = 0; i < trace.terms.size(); ++i) rows.push_back({i, trace.terms[i]});
  const QuadraticSurd limit = limit_simple(kappa);
  emit_trace(ctx, rows,
             {{"kappa", kappa.get_str()},
              {"seeding", seed},
              {"digits", ctx.digits},
              {"limit", surd_json(limit)},
              {"limit_decimal", decimal_approx(limit, ctx.digits)}});
}

void cmd_monic(const Context& ctx, const std::string& b_text, const std::string& c_text,
               const std::optional<std::string>& x0_text, std::size_t terms) {
  const Rational b = Rational::parse(b_text);
  const Rational c = Rational::parse(c_text);
  const Rational x0 = x0_text ? Rational::parse(*x0_text) : -b;
  const auto trace = iterate_monic(b, c, x0, terms);
  std::vector<TraceRow> rows;
  for (std::size_t i = 0; i < trace.size(); ++i) rows.push_back({i, trace[i]});
  emit_trace(ctx, rows, {{"b", b.str()}, {"c", c.str()}, {"x0", x0.str()}});
}

void cmd_classify(const Context& ctx, const std::string& b_text, const std::string& c_text) {
  const MonicClassification result = classify_monic(Rational::parse(b_text), Rational::parse(c_text));
  std::vector<std::pair<std::string, std::string>> fields = {
      {"b", result.b.str()},
      {"c", result.c.str()},
      {"discriminant", result.discriminant.str()},
      {"verdict", to_string(result.verdict)}};
  json document = {{"b", result.b.str()},
                   {"c", result.c.str()},
                   {"discriminant", result.discriminant.str()},
                   {"verdict", to_string(result.verdict)},
                   {"root", nullptr},
                   {"ratio", nullptr}};
  std::ostringstream plain;
  plain << "verdict: " << to_string(result.verdict) << "\ndiscriminant: " << result.discriminant.str();

  auto add = [&](const char* name, const std::optional<QuadraticNumber>& value) {
    if (!value) return;
    const std::string text = exact_text(*value);
    const std::string decimal = value->to_decimal(ctx.digits);
    fields.emplace_back(name, text);
    fields.emplace_back(std::string(name) + "_decimal", decimal);
    document[name] = {{"exact", text}, {"decimal", decimal}};
    plain << '\n' << name << ": " << text << " ~ " << decimal;
  };
  add("root", result.root);
  add("ratio", result.ratio);
  emit_fields(ctx, fields, plain.str(), document);
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::Invariant:
      return kExitUsage;
    case ErrorKind::PeriodNotFound:
      return kExitBudget;
    default:
      return kExitDomain;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact continued fractions: rationals, quadratic surds, Pell's equation"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{3, Format::Plain, &in, &out};
  app.add_option("--digits", ctx.digits, "Decimal places in displayed approximations")
      ->check(CLI::Range(0U, 100000U));
  app.add_option("--format", ctx.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}}));

  std::function<void()> action;
  std::size_t max_terms = kDefaultExpansionBudget;

  std::string rational_text;
  auto* expand = app.add_subcommand("expand", "Continued fraction of a rational p/q");
  expand->add_option("rational", rational_text, "p/q or an integer")->required();
  expand->callback([&] { action = [&] { cmd_expand(ctx, rational_text); }; });

  std::string cf_text;
  auto* eval = app.add_subcommand("eval", "Value of a continued fraction (\"-\" reads stdin)");
  eval->add_option("cf", cf_text, "e.g. \"[2;1,3,4]\" or \"[1;(2)]\"")->required();
  eval->callback([&] { action = [&] { cmd_eval(ctx, cf_text); }; });

  std::optional<std::size_t> count;
  auto* conv = app.add_subcommand("convergents", "Convergents p_n/q_n of a continued fraction");
  conv->add_option("cf", cf_text)->required();
  conv->add_option("--count", count, "Number of convergents")->check(CLI::PositiveNumber);
  conv->callback([&] { action = [&] { cmd_convergents(ctx, cf_text, count); }; });

  std::string n_text;
  auto* sqrt_cmd = app.add_subcommand("sqrt", "Periodic continued fraction of sqrt(n)");
  sqrt_cmd->add_option("n", n_text)->required();
  sqrt_cmd->add_option("--max-terms", max_terms, "Expansion budget");
  sqrt_cmd->callback([&] { action = [&] { cmd_sqrt(ctx, n_text, max_terms); }; });

  std::string p_text, d_text, q_text;
  auto* surd = app.add_subcommand("surd", "Expand the quadratic irrational (P + sqrt(D))/Q");
  surd->add_option("P", p_text)->required();
  surd->add_option("D", d_text)->required();
  surd->add_option("Q", q_text)->required();
  surd->add_option("--max-terms", max_terms, "Expansion budget");
  surd->callback([&] { action = [&] { cmd_surd(ctx, p_text, d_text, q_text, max_terms); }; });

  auto* from_periodic = app.add_subcommand("from-periodic", "Quadratic irrational of a periodic continued fraction");
  from_periodic->add_option("pcf", cf_text, "e.g. \"[(1)]\" (\"-\" reads stdin)")->required();
  from_periodic->callback([&] { action = [&] { cmd_from_periodic(ctx, cf_text); }; });

  std::optional<int> sign;
  auto* pell = app.add_subcommand("pell", "Solutions of x^2 - n*y^2 = +-1");
  pell->add_option("n", n_text)->required();
  pell->add_option("--count", count, "Number of solutions")->check(CLI::PositiveNumber);
  pell->add_option("--sign", sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
  pell->callback([&] { action = [&] { cmd_pell(ctx, n_text, count, sign); }; });

  std::string kappa_text;
  std::size_t terms = 11;
  std::string seed = "recurrence";
  auto* iterate = app.add_subcommand("iterate", "Exact terms of t_{n+1} = kappa + 1/t_n");
  iterate->add_option("--kappa", kappa_text)->required();
  iterate->add_option("--terms", terms)->check(CLI::PositiveNumber);
  iterate->add_option("--seed", seed)->check(CLI::IsMember({"paper", "recurrence"}));
  iterate->callback([&] { action = [&] { cmd_iterate(ctx, kappa_text, terms, seed); }; });

  std::string b_text, c_text;
  std::optional<std::string> x0_text;
  std::size_t monic_terms = 60;
  auto* monic = app.add_subcommand("monic", "Exact trace of x_{k+1} = -b - c/x_k (x0 defaults to -b)");
  monic->add_option("--b", b_text)->required();
  monic->add_option("--c", c_text)->required();
  monic->add_option("--x0", x0_text);
  monic->add_option("--terms", monic_terms)->check(CLI::PositiveNumber);
  monic->callback([&] { action = [&] { cmd_monic(ctx, b_text, c_text, x0_text, monic_terms); }; });

  auto* classify = app.add_subcommand("classify", "Convergence verdict for x^2 + bx + c = 0");
  classify->add_option("--b", b_text)->required();
  classify->add_option("--c", c_text)->required();
  classify->callback([&] { action = [&] { cmd_classify(ctx, b_text, c_text); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    action();
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace cfrac::cli
