// Command-line front end for the nakayama library.
//
// Exit codes: 0 success / verification passed, 1 domain or usage error,
// 2 verification failure (counterexamples are printed first).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nakayama/nakayama.hpp"

using namespace nakayama;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  CharSeq z = parse_char_seq(text);
  return z;
}

Module parse_module(const KupischSeries& a, const std::string& text) {
  std::vector<int> tl = parse_int_list(text);
  if (tl.size() != 2)
    throw domain_error("--module expects \"t,l\", got '" + text + "'");
  return make_module(a, tl[0], tl[1]);
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw domain_error("cannot open output file '" + path + "'");
  out << content;
}

std::string info_text(const CensusRecord& r, const std::string& format) {
  std::ostringstream os;
  if (format == "records") {
    os << to_record_line(r) << " ha=" << (r.is_ha ? 1 : 0)
       << " concave=" << (r.concave ? 1 : 0) << "\n";
    return os.str();
  }
  os << "kupisch series : " << to_string(r.kupisch) << "\n"
     << "rank n         : " << r.n << "\n"
     << "height h       : " << r.h << "\n"
     << "gldim          : " << to_string(r.gldim) << "\n"
     << "domdim         : " << to_string(r.domdim) << "\n"
     << "higher Auslander: " << (r.is_ha ? "yes" : "no");
  if (r.is_ha) os << " (degree " << r.d << ")";
  os << "\n"
     << "concave        : " << (r.concave ? "yes" : "no") << "\n";
  if (r.concave) {
    os << "summits        : " << r.summit_count << "\n"
       << "first summit   : " << to_string(r.first_summit_char) << "\n"
       << "last summit    : " << to_string(r.last_summit_char) << "\n"
       << "z sequence     : " << to_string(r.z_char) << "\n";
  }
  return os.str();
}

int report_outcome(const VerifyReport& rep, const std::string& what) {
  if (rep.pass) {
    std::cout << "PASS " << what << "\n";
    return 0;
  }
  for (const std::string& f : rep.failures) std::cout << f << "\n";
  std::cout << "FAIL " << what << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological invariants of linear Nakayama algebras"};
  app.require_subcommand(1);

  std::string series_arg, module_arg, seq_arg, out_arg;
  std::string format_arg = "human", labels_arg = "pd", verify_what;
  int d_arg = 1, max_n_arg = 12, max_u_arg = 3, jobs_arg = 1;
  bool trace_arg = false;

  CLI::App* validate = app.add_subcommand("validate", "Check a Kupisch series");
  validate->add_option("series", series_arg)->required();

  CLI::App* info = app.add_subcommand("info", "Invariants of an algebra");
  info->add_option("series", series_arg)->required();
  info->add_option("--format", format_arg)
      ->check(CLI::IsMember({"human", "records"}));

  CLI::App* pd_cmd = app.add_subcommand("pd", "Projective dimension of M(t,l)");
  pd_cmd->add_option("series", series_arg)->required();
  pd_cmd->add_option("--module", module_arg)->required();

  CLI::App* char_cmd =
      app.add_subcommand("char", "Characteristic sequence of M(t,l)");
  char_cmd->add_option("series", series_arg)->required();
  char_cmd->add_option("--module", module_arg)->required();

  CLI::App* ascent =
      app.add_subcommand("ascent", "Ascending algebra of a sequence");
  ascent->add_option("sequence", seq_arg)->required();

  CLI::App* closure = app.add_subcommand("closure", "Partial d-closure");
  closure->add_option("series", series_arg)->required();
  closure->add_option("--d", d_arg)->required();
  closure->add_flag("--trace", trace_arg);

  CLI::App* hd = app.add_subcommand("hd", "Standard algebra H_d(sequence)");
  hd->add_option("--d", d_arg)->required();
  hd->add_option("--seq", seq_arg);

  CLI::App* census_cmd =
      app.add_subcommand("census", "Concave higher Auslander census");
  census_cmd->add_option("--max-n", max_n_arg);
  census_cmd->add_option("--out", out_arg);
  census_cmd->add_option("--jobs", jobs_arg)->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("what", verify_what)
      ->required()
      ->check(CLI::IsMember({"thm1", "thm1p", "thm3", "props"}));
  verify->add_option("--d", d_arg);
  verify->add_option("--seq", seq_arg);
  verify->add_option("--max-n", max_n_arg);
  verify->add_option("--max-u", max_u_arg);
  verify->add_option("--jobs", jobs_arg)->check(CLI::PositiveNumber);

  CLI::App* render = app.add_subcommand("render", "Draw the module lattice");
  render->add_option("series", series_arg)->required();
  render->add_option("--labels", labels_arg)
      ->check(CLI::IsMember({"pd", "none"}));
  render->add_option("--format", format_arg)
      ->check(CLI::IsMember({"human", "records"}));
  render->add_option("--out", out_arg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) {
      std::cout << to_string(parse_kupisch(series_arg)) << "\n";
    } else if (*info) {
      std::cout << info_text(analyze(parse_kupisch(series_arg)), format_arg);
    } else if (*pd_cmd) {
      KupischSeries a = parse_kupisch(series_arg);
      std::cout << pd_value(a, parse_module(a, module_arg)) << "\n";
    } else if (*char_cmd) {
      KupischSeries a = parse_kupisch(series_arg);
      std::cout << to_string(char_of(a, parse_module(a, module_arg))) << "\n";
    } else if (*ascent) {
      std::cout << to_string(ascent_algebra(parse_char_seq(seq_arg))) << "\n";
    } else if (*closure) {
      ClosureResult r = partial_d_closure(parse_kupisch(series_arg), d_arg);
      std::cout << to_string(r.algebra) << "\n";
      if (r.gldim_warning)
        std::cout << "warning: d is below the global dimension; "
                     "the result is not d-closed\n";
      if (trace_arg)
        for (std::size_t i = 0; i < r.cliff_trace.size(); ++i)
          std::cout << "step " << i + 1 << ": extend by "
                    << to_string(r.cliff_trace[i]) << "\n";
    } else if (*hd) {
      std::vector<int> cs =
          seq_arg.empty() ? std::vector<int>{} : parse_int_list(seq_arg);
      std::cout << to_string(h_algebra(d_arg, cs)) << "\n";
    } else if (*census_cmd) {
      std::string content;
      for (const CensusRecord& r : census(max_n_arg))
        content += to_record_line(r) + "\n";
      write_out(out_arg, content);
    } else if (*verify) {
      if (verify_what == "thm1")
        return report_outcome(verify_theorem_1(d_arg, max_u_arg, max_n_arg),
                              "thm1 d=" + std::to_string(d_arg));
      if (verify_what == "thm1p")
        return report_outcome(verify_theorem_1p(d_arg, max_n_arg),
                              "thm1p d=" + std::to_string(d_arg));
      if (verify_what == "thm3") {
        std::vector<int> cs =
            seq_arg.empty() ? std::vector<int>{} : parse_int_list(seq_arg);
        return report_outcome(verify_theorem_3(d_arg, cs),
                              "thm3 d=" + std::to_string(d_arg));
      }
      // props: structural properties over the census up to max_n
      VerifyReport rep;
      for (const CensusRecord& r : census(max_n_arg)) {
        VerifyReport one = check_structural_props(r.kupisch);
        for (const std::string& f : one.failures)
          rep.fail(to_string(r.kupisch) + ": " + f);
      }
      return report_outcome(rep, "props max-n=" + std::to_string(max_n_arg));
    } else if (*render) {
      QuiverLayout l =
          layout(parse_kupisch(series_arg),
                 labels_arg == "pd" ? LabelMode::pd : LabelMode::none);
      write_out(out_arg,
                format_arg == "records" ? to_graph_desc(l) : to_text(l));
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
