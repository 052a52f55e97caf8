#include "slopes/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slopes/density.hpp"
#include "slopes/euler.hpp"
#include "slopes/knots.hpp"
#include "slopes/plot.hpp"
#include "slopes/slope_sets.hpp"

namespace slopes {

namespace {

enum class Format { human, records, csv };

Format parse_format(const std::string& text) {
  if (text == "human") return Format::human;
  if (text == "records") return Format::records;
  if (text == "csv") return Format::csv;
  throw CLI::ValidationError("--format", "expected human, records or csv");
}

// Bare "a,b" intervals default to closed for enumeration windows and open for
// gap queries; explicit brackets always win.
RationalInterval parse_interval_arg(const std::string& text, bool default_open) {
  if (!text.empty() && (text.front() == '(' || text.front() == '[') )
    return RationalInterval::parse(text);
  std::string wrapped = default_open ? "(" + text + ")" : "[" + text + "]";
  return RationalInterval::parse(wrapped);
}

const char* vanishing_word(Vanishing v) {
  switch (v) {
    case Vanishing::zero: return "zero";
    case Vanishing::nonzero: return "nonzero";
    case Vanishing::undetermined: return "undetermined";
  }
  return "?";
}

Condition1 parse_condition1(const std::string& text) {
  if (text == "holds") return Condition1::holds;
  if (text == "fails") return Condition1::fails;
  if (text == "unknown") return Condition1::unknown;
  throw CLI::ValidationError("--condition1", "expected holds, fails or unknown");
}

void print_slope_list(const std::vector<Slope>& slopes, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::human: {
      for (const Slope& s : slopes) out << s.str() << "\n";
      out << "(" << slopes.size() << " slopes)\n";
      break;
    }
    case Format::records:
      for (const Slope& s : slopes) out << "slope=" << s.str() << "\n";
      break;
    case Format::csv:
      out << "slope\n";
      for (const Slope& s : slopes) out << s.str() << "\n";
      break;
  }
}

struct CliState {
  std::ostream& out;
  std::ostream& err;
  int result = 0;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Euler-class slope arithmetic for Dehn fillings"};
  app.require_subcommand(1);
  CliState state{out, err};

  // ---- check ------------------------------------------------------------
  auto* check = app.add_subcommand(
      "check", "evaluate the vanishing congruence (a*q)/k == b (mod p) for one slope");
  struct {
    i64 a = 0, b = 1, k = 1, x = 0;
    std::string slope, condition1 = "holds", format = "human";
  } check_opts;
  check->add_option("--a", check_opts.a, "relative class on the surface, e_sigma(F)([F])")
      ->required();
  check->add_option("--b", check_opts.b, "relative class on the disk, +1 or -1")->required();
  check->add_option("--k", check_opts.k, "order of the rational longitude (default 1)");
  check->add_option("--x", check_opts.x, "Thurston norm (optional, informational)");
  check->add_option("--slope", check_opts.slope, "filling slope p/q")->required();
  check->add_option("--condition1", check_opts.condition1,
                    "status of the H^2(X) condition: holds|fails|unknown");
  check->add_option("--format", check_opts.format, "human|records");
  check->callback([&] {
    Slope s = Slope::parse(check_opts.slope);
    FillingContext ctx =
        FillingContext::general(check_opts.k, check_opts.x, parse_condition1(check_opts.condition1));
    RelEulerData rel(check_opts.a, check_opts.b);
    i64 residue = obstruction_residue(rel, ctx, s);  // rejects k∤a and the longitude
    Vanishing v = vanishing_iff(rel, ctx, s);
    if (parse_format(check_opts.format) == Format::records) {
      state.out << "residue=" << residue << "\n";
      state.out << "verdict=" << vanishing_word(v) << "\n";
    } else {
      state.out << vanishing_word(v) << "\n";
    }
  });

  // ---- set --------------------------------------------------------------
  auto* set = app.add_subcommand("set", "slope-set membership and enumeration");
  set->require_subcommand(1);

  auto* member = set->add_subcommand("member", "decide membership of one slope");
  struct {
    std::string set, slope, format = "human";
  } member_opts;
  member->add_option("--set", member_opts.set, "set descriptor, e.g. L:g=2 or M:g=2,n=1")
      ->required();
  member->add_option("--slope", member_opts.slope, "slope p/q")->required();
  member->add_option("--format", member_opts.format, "human|records");
  member->callback([&] {
    SlopeSetDescriptor desc = SlopeSetDescriptor::parse(member_opts.set);
    Slope s = Slope::parse(member_opts.slope);
    bool m = contains(desc, s);
    if (parse_format(member_opts.format) == Format::records)
      state.out << "member=" << (m ? "true" : "false") << "\n";
    else
      state.out << (m ? "true" : "false") << "\n";
  });

  auto* enum_cmd = set->add_subcommand("enum", "list members inside a window");
  struct {
    std::string set, interval, format = "human";
    i64 max_den = 1;
    i64 max_level = -1;
  } enum_opts;
  enum_cmd->add_option("--set", enum_opts.set, "set descriptor")->required();
  enum_cmd->add_option("--interval", enum_opts.interval,
                       "window, e.g. -2,2 or (0,1] (bare form is closed)")
      ->required();
  enum_cmd->add_option("--max-den", enum_opts.max_den, "largest |q| to list")->required();
  enum_cmd->add_option("--max-level", enum_opts.max_level, "largest union level n");
  enum_cmd->add_option("--format", enum_opts.format, "human|records|csv");
  enum_cmd->callback([&] {
    SlopeSetDescriptor desc = SlopeSetDescriptor::parse(enum_opts.set);
    EnumerationWindow w{parse_interval_arg(enum_opts.interval, false), enum_opts.max_den,
                        enum_opts.max_level < 0 ? std::nullopt
                                                : std::optional<i64>(enum_opts.max_level)};
    print_slope_list(enumerate_set(desc, w), parse_format(enum_opts.format), state.out);
  });

  // ---- verify -----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "structural property suites");
  verify->require_subcommand(1);
  auto* lemmas = verify->add_subcommand(
      "lemmas", "run the L/M structure suite (inclusions, slices, extremes, bounds)");
  struct {
    i64 g_max = 3;
    i64 series_max = 100;
    std::string format = "human";
  } lemma_opts;
  lemmas->add_option("--g-max", lemma_opts.g_max, "largest genus to exercise");
  lemmas->add_option("--series-max", lemma_opts.series_max, "series denominator cap");
  lemmas->add_option("--format", lemma_opts.format, "human|records");
  lemmas->callback([&] {
    LemmaReport report = run_lemma_suite(lemma_opts.g_max, lemma_opts.series_max);
    bool records = parse_format(lemma_opts.format) == Format::records;
    for (size_t i = 0; i < report.entries.size(); ++i) {
      const auto& e = report.entries[i];
      if (records) {
        state.out << "check." << i << ".name=" << e.name << "\n";
        state.out << "check." << i << ".pass=" << (e.pass ? "true" : "false") << "\n";
      } else {
        state.out << (e.pass ? "PASS " : "FAIL ") << e.name;
        if (!e.detail.empty()) state.out << "  [" << e.detail << "]";
        state.out << "\n";
      }
    }
    if (records)
      state.out << "all_pass=" << (report.all_pass() ? "true" : "false") << "\n";
    else
      state.out << (report.all_pass() ? "all checks passed" : "FAILURES PRESENT") << "\n";
    if (!report.all_pass()) state.result = 1;
  });

  // ---- gap --------------------------------------------------------------
  auto* gap = app.add_subcommand(
      "gap", "produce and verify a finite certificate that an interval misses Mg/Mx");
  struct {
    std::string set, interval;
  } gap_opts;
  gap->add_option("--set", gap_opts.set, "M:g=... or Mx:x=...,k=...")->required();
  gap->add_option("--interval", gap_opts.interval,
                  "open query interval avoiding 0, e.g. 1/3,2/5")
      ->required();
  gap->callback([&] {
    SlopeSetDescriptor desc = SlopeSetDescriptor::parse(gap_opts.set);
    RationalInterval query = parse_interval_arg(gap_opts.interval, true);
    GapCertificate cert = gap_certificate(desc, query);
    CertificateCheck chk = verify_certificate(desc, cert);
    state.out << serialize_certificate(desc, cert);
    state.out << "verified=" << (chk.ok ? "true" : "false") << "\n";
    if (!chk.ok) {
      state.out << "reason=" << chk.reason << "\n";
      state.result = 1;
    }
  });

  // ---- knot -------------------------------------------------------------
  auto* knot = app.add_subcommand("knot", "family-based left-orderability verdicts");
  knot->require_subcommand(1);

  auto* verdict = knot->add_subcommand("verdict", "verdict for a single slope");
  struct {
    std::string knot, slope, format = "human";
  } verdict_opts;
  verdict->add_option("--knot", verdict_opts.knot,
                      "knot descriptor, e.g. fig8 or twobridge:g=2")
      ->required();
  verdict->add_option("--slope", verdict_opts.slope, "slope p/q")->required();
  verdict->add_option("--format", verdict_opts.format, "human|records");
  verdict->callback([&] {
    KnotDescriptor kd = KnotDescriptor::parse(verdict_opts.knot);
    Verdict v = lo_verdict(kd, Slope::parse(verdict_opts.slope));
    if (parse_format(verdict_opts.format) == Format::records) {
      state.out << "slope=" << v.slope.str() << "\n";
      state.out << "foliation_detected=" << (v.foliation_detected ? "true" : "false") << "\n";
      state.out << "euler_zero=" << (v.euler_zero ? "true" : "false") << "\n";
      state.out << "lo_detected=" << (v.lo_detected ? "true" : "false") << "\n";
      for (size_t i = 0; i < v.provenance.size(); ++i)
        state.out << "provenance." << i << "=" << v.provenance[i] << "\n";
    } else {
      state.out << "slope " << v.slope.str() << " on " << kd.str() << "\n";
      state.out << "  foliation detected: " << (v.foliation_detected ? "yes" : "no") << "\n";
      state.out << "  euler class zero:   " << (v.euler_zero ? "yes" : "no") << "\n";
      state.out << "  left-orderable detected: " << (v.lo_detected ? "yes" : "no")
                << (v.lo_detected ? "" : "  (not concluded by this method)") << "\n";
      for (const std::string& p : v.provenance) state.out << "  via " << p << "\n";
    }
  });

  auto* slopes_cmd = knot->add_subcommand("slopes", "all detected slopes inside a window");
  struct {
    std::string knot, interval, format = "human";
    i64 max_den = 1;
    i64 max_level = -1;
  } slopes_opts;
  slopes_cmd->add_option("--knot", slopes_opts.knot, "knot descriptor")->required();
  slopes_cmd->add_option("--interval", slopes_opts.interval, "window (bare form is closed)")
      ->required();
  slopes_cmd->add_option("--max-den", slopes_opts.max_den, "largest |q| to list")->required();
  slopes_cmd->add_option("--max-level", slopes_opts.max_level, "largest L-set level");
  slopes_cmd->add_option("--format", slopes_opts.format, "human|records|csv");
  slopes_cmd->callback([&] {
    KnotDescriptor kd = KnotDescriptor::parse(slopes_opts.knot);
    EnumerationWindow w{parse_interval_arg(slopes_opts.interval, false), slopes_opts.max_den,
                        slopes_opts.max_level < 0 ? std::nullopt
                                                  : std::optional<i64>(slopes_opts.max_level)};
    print_slope_list(lo_slopes(kd, w), parse_format(slopes_opts.format), state.out);
  });

  // ---- figure -----------------------------------------------------------
  auto* figure = app.add_subcommand("figure", "render a built-in number-line figure");
  struct {
    int id = 1;
    std::string format = "svg", out_path;
  } fig_opts;
  figure->add_option("--id", fig_opts.id, "figure id, 1..5")->required();
  figure->add_option("--format", fig_opts.format, "svg|ascii");
  figure->add_option("--out", fig_opts.out_path, "write to file instead of stdout");
  figure->callback([&] {
    bool svg;
    if (fig_opts.format == "svg")
      svg = true;
    else if (fig_opts.format == "ascii")
      svg = false;
    else
      throw CLI::ValidationError("--format", "expected svg or ascii");
    std::string doc = render_figure(fig_opts.id, svg);
    if (fig_opts.out_path.empty()) {
      state.out << doc;
    } else {
      std::ofstream f(fig_opts.out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open '" + fig_opts.out_path + "' for writing");
      f << doc;
    }
  });

  try {
    app.parse(argc, argv);
    return state.result;
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error=usage\nmessage=" << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "error=usage\nmessage=" << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error=domain\nmessage=" << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error=domain\nmessage=" << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error=internal\nmessage=" << e.what() << "\n";
    return 4;
  }
}

}  // namespace slopes
