// ibs: evaluate inverse binomial series, polylogarithms and constants, and
// verify the built-in identity catalog.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input or unknown
// id, 3 evaluation error.

#include "ibs/ibs.hpp"
#include "ibs/report_json.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitEval = 3;

struct CliConfig {
  int digits = 40;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string json_path;
};

// Input errors (kind parse) map to 2; everything else raised while
// evaluating maps to 3.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ibs::Error& e) {
    std::cerr << "ibs: " << e.what() << "\n";
    return e.kind() == ibs::ErrorKind::parse ? kExitInput : kExitEval;
  } catch (const std::exception& e) {
    std::cerr << "ibs: " << e.what() << "\n";
    return kExitEval;
  }
}

ibs::CutSide parse_side(const std::string& s) {
  if (s == "auto") return ibs::CutSide::automatic;
  if (s == "upper") return ibs::CutSide::upper;
  if (s == "lower") return ibs::CutSide::lower;
  ibs::fail(ibs::ErrorKind::parse, "side must be auto, upper or lower: " + s);
}

int cmd_eval_const(const std::string& name, const CliConfig& cfg) {
  const auto n = ibs::named_from_string(name);
  if (!n) {
    std::cerr << "ibs: unknown constant '" << name << "'; known:";
    for (auto k : ibs::kAllNamed) std::cerr << " " << ibs::name_of(k);
    std::cerr << "\n";
    return kExitInput;
  }
  return guarded([&] {
    const ibs::PrecisionCtx ctx(cfg.digits);
    std::cout << ibs::to_string(ibs::named_constant(*n, ctx).value, cfg.digits) << "\n";
    return 0;
  });
}

int cmd_eval(const std::string& kind, const std::vector<std::string>& args, const std::string& side,
             const CliConfig& cfg) {
  auto need = [&](std::size_t n, const char* usage) {
    if (args.size() != n) ibs::fail(ibs::ErrorKind::parse, std::string("usage: eval ") + usage);
  };
  if (kind == "const") {
    if (args.size() != 1) {
      std::cerr << "ibs: usage: eval const NAME\n";
      return kExitInput;
    }
    return cmd_eval_const(args[0], cfg);
  }
  return guarded([&] {
    const ibs::PrecisionCtx ctx(cfg.digits);
    ibs::PrecisionScope scope(ctx);
    ibs::ApComplex r;
    if (kind == "series") {
      need(2, "series K Z");
      const int k = static_cast<int>(ibs::parse_integer(args[0]));
      const ibs::Expr z = ibs::parse_point(args[1]);
      r = ibs::s_series(k, ibs::eval_expr(z, ctx).value, ctx);
    } else if (kind == "li") {
      need(2, "li S Z");
      const int s = static_cast<int>(ibs::parse_integer(args[0]));
      const ibs::Expr z = ibs::parse_point(args[1]);
      r = ibs::li(s, ibs::eval_expr(z, ctx).value, parse_side(side), ctx);
    } else if (kind == "gpl") {
      need(2, "gpl A1,A2,... Z");
      const auto letters = ibs::parse_point_list(args[0]);
      const ibs::Expr z = ibs::parse_point(args[1]);
      ibs::GplWord<ibs::Complex> word;
      for (const auto& a : letters) word.letters.push_back(ibs::eval_expr(a, ctx).value);
      word.arg = ibs::eval_expr(z, ctx).value;
      r = ibs::gpl_eval(word, ctx);
    } else {
      ibs::fail(ibs::ErrorKind::parse, "eval kind must be series, const, gpl or li: " + kind);
    }
    std::cout << ibs::to_string(r.value, cfg.digits) << "\n";
    return 0;
  });
}

int cmd_list() {
  for (const auto& id : ibs::builtin_catalog()) {
    std::printf("%-14s w=%d N=%-3d %-44s %s\n", id.id.c_str(), id.weight, id.level, id.description.c_str(),
                id.anchor.c_str());
  }
  return 0;
}

int cmd_verify(const std::string& which, const CliConfig& cfg) {
  auto catalog = ibs::builtin_catalog();
  if (which != "all") {
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const ibs::Identity& i) { return i.id == which; });
    if (it == catalog.end()) {
      std::cerr << "ibs: unknown identity '" << which << "' (see `ibs list`)\n";
      return kExitInput;
    }
    catalog = {*it};
  }
  return guarded([&] {
    const ibs::PrecisionCtx ctx(cfg.digits);
    if (cfg.jobs < 1) ibs::fail(ibs::ErrorKind::parse, "--jobs must be >= 1");
    const auto reports = ibs::verify_all(catalog, ctx, cfg.jobs);

    std::printf("%-14s %-6s %8s %8s %5s %9s  %s\n", "id", "status", "digits", "contour", "w/N", "ms", "anchor");
    int passed = 0;
    bool any_fail = false;
    bool any_error = false;
    for (std::size_t j = 0; j < reports.size(); ++j) {
      const auto& r = reports[j];
      const auto& id = catalog[j];
      char contour[16] = "-";
      if (r.contour_digits) std::snprintf(contour, sizeof contour, "%.1f", *r.contour_digits);
      const std::string wn = std::to_string(id.weight) + "/" + std::to_string(id.level);
      std::printf("%-14s %-6s %8.1f %8s %5s %9.1f  %s\n", r.id.c_str(), ibs::to_string(r.status), r.digits_agreed,
                  contour, wn.c_str(), r.elapsed_ms, r.anchor.c_str());
      if (r.status == ibs::Status::error) std::printf("  error: %s\n", r.message.c_str());
      passed += r.status == ibs::Status::pass;
      any_fail = any_fail || r.status == ibs::Status::fail;
      any_error = any_error || r.status == ibs::Status::error;
    }
    std::printf("%d/%zu passed at %d digits\n", passed, reports.size(), cfg.digits);

    if (!cfg.json_path.empty()) {
      std::ofstream out(cfg.json_path, std::ios::binary);
      if (!out) ibs::fail(ibs::ErrorKind::parse, "cannot write " + cfg.json_path);
      out << ibs::report_document(reports, catalog, cfg.digits).dump(2) << "\n";
    }
    if (any_error) return kExitEval;
    return any_fail ? kExitFail : 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse binomial series and polylogarithm evaluator"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub, bool parallel) {
    sub->add_option("--digits", cfg.digits, "Decimal digits")->check(CLI::Range(10, 100000));
    if (parallel) {
      sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
      sub->add_option("--json", cfg.json_path, "Write the structured report to PATH");
    }
  };

  std::string eval_kind;
  std::vector<std::string> eval_args;
  std::string side = "auto";
  auto* eval = app.add_subcommand("eval", "Evaluate series, const, gpl or li");
  eval->add_option("kind", eval_kind, "series | const | gpl | li")->required();
  eval->add_option("args", eval_args, "Arguments for the kind");
  eval->add_option("--side", side, "Cut side for li on real z > 1: auto, upper, lower");
  add_common(eval, false);

  std::string const_name;
  auto* konst = app.add_subcommand("const", "Alias of `eval const`");
  konst->add_option("name", const_name, "Constant name")->required();
  add_common(konst, false);

  std::string which;
  auto* verify = app.add_subcommand("verify", "Verify one identity or all");
  verify->add_option("id", which, "Catalog id or 'all'")->required();
  add_common(verify, true);

  auto* list = app.add_subcommand("list", "List catalog ids and anchors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*eval) return cmd_eval(eval_kind, eval_args, side, cfg);
  if (*konst) return cmd_eval_const(const_name, cfg);
  if (*verify) return cmd_verify(which, cfg);
  if (*list) return cmd_list();
  return kExitInput;
}
