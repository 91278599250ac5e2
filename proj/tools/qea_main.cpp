// qea: command-line front end for the quantum enveloping algebra engine.
//
// Subcommands: verify, complete, hard, heights, crystal, dims, primitives,
// fuzz-identities, check-params. Inputs are preset names ("a2".."d4") or
// presentation JSON files. All reports go to stdout as JSON (or plain text
// with --text) and are byte-identical across identical invocations; timing
// goes to stderr only.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
// 3 broken internal invariant.

#include <CLI/CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "qea/fuzz.hpp"
#include "qea/pbw.hpp"
#include "qea/presentation.hpp"
#include "qea/verify.hpp"

namespace {

using nlohmann::ordered_json;

std::string hex_hash(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw qea::parse_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw qea::domain_error("cannot write output file: " + path);
  f << data;
}

// A positional input is either a preset name or a path to a presentation
// JSON document.
qea::Presentation load_presentation(const std::string& input) {
  if (auto pn = qea::parse_preset_name(input))
    return qea::generic_presentation(pn->first, pn->second);
  return qea::presentation_from_json(read_file(input));
}

std::map<std::string, qea::Rat> parse_specialization(const std::string& text) {
  std::map<std::string, qea::Rat> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw qea::parse_error("bad --specialize item (want name=rational): " + item);
    values[item.substr(0, eq)] = qea::parse_rational(item.substr(eq + 1));
    pos = comma + 1;
  }
  if (values.empty()) throw qea::parse_error("--specialize is empty");
  return values;
}

std::vector<unsigned> parse_constitution(const std::string& text, std::size_t ngen) {
  std::vector<unsigned> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw qea::parse_error("bad --constitution entry: '" + item + "'");
    c.push_back(static_cast<unsigned>(std::stoul(item)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (c.size() != ngen)
    throw qea::parse_error("--constitution has " + std::to_string(c.size()) +
                           " entries, presentation has " + std::to_string(ngen) +
                           " generators");
  return c;
}

// Common options most artifact subcommands share.
struct CommonOpts {
  std::string input;
  long max_degree = 0;  // 0: use the preset's own bound
  std::string out;
  std::string cache;
  std::string specialize;
  bool text = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
  if (needs_input)
    cmd->add_option("input", o.input,
                    "preset name (a2..a4, b2, b3, c2, c3, d4) or presentation JSON file")
        ->required();
  cmd->add_option("--max-degree", o.max_degree, "completion degree bound");
  cmd->add_option("--out", o.out, "also write the report to this file");
  cmd->add_option("--cache", o.cache, "completion cache directory");
  cmd->add_option("--specialize", o.specialize,
                  "substitute parameters first: name=rational[,name=rational...]");
  cmd->add_flag("--text", o.text, "plain-text report instead of JSON");
}

// The effective presentation (specialized if requested) plus its bound.
struct LoadedInput {
  qea::Presentation pr;
  long bound;
  std::uint64_t hash;
};

LoadedInput resolve(const CommonOpts& o) {
  qea::Presentation pr = load_presentation(o.input);
  if (!o.specialize.empty())
    pr = qea::specialize(pr, parse_specialization(o.specialize));
  long bound = o.max_degree;
  if (bound <= 0) {
    auto pn = pr.kind ? qea::parse_preset_name(*pr.kind) : std::nullopt;
    if (!pn)
      throw qea::parse_error(
          "--max-degree is required for presentations without a preset kind");
    bound = qea::verify_bound(pn->first, pn->second);
  }
  std::uint64_t hash = qea::presentation_hash(pr);
  return {std::move(pr), bound, hash};
}

// Completes the presentation at the bound, going through the cache directory
// when one is given. Cache files are keyed by (presentation hash, bound);
// a stored document whose recorded key disagrees is reported as corruption.
qea::RewriteSystem completed_system(const LoadedInput& in, const std::string& cache) {
  const std::string hex = hex_hash(in.hash);
  std::filesystem::path file;
  if (!cache.empty()) {
    std::filesystem::create_directories(cache);
    file = std::filesystem::path(cache) / (hex + "_d" + std::to_string(in.bound) + ".json");
    if (std::filesystem::exists(file)) {
      ordered_json j;
      try {
        j = ordered_json::parse(read_file(file.string()));
        if (j.at("presentation").get<std::string>() != hex ||
            j.at("bound").get<long>() != in.bound)
          throw qea::domain_error("cache corruption: key mismatch in " + file.string());
        return qea::system_from_json(in.pr.params, j.at("system").dump());
      } catch (const nlohmann::json::exception& e) {
        throw qea::domain_error("cache corruption in " + file.string() + ": " + e.what());
      }
    }
  }
  qea::RewriteSystem sys(in.pr.params, in.pr.ngen, in.pr.degrees);
  sys.complete(in.pr.relations, in.bound);
  if (!cache.empty()) {
    ordered_json j;
    j["presentation"] = hex;
    j["bound"] = in.bound;
    j["system"] = ordered_json::parse(qea::system_to_json(sys));
    write_file(file.string(), j.dump(2) + "\n");
  }
  return sys;
}

// Prints the report to stdout and mirrors it to --out when given.
void emit(const CommonOpts& o, const std::string& doc) {
  std::string body = doc;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (!o.out.empty()) write_file(o.out, body);
  std::cout << body;
}

ordered_json input_header(const CommonOpts& o, const LoadedInput& in) {
  ordered_json j;
  j["input"] = o.input;
  if (in.pr.kind) j["kind"] = *in.pr.kind;
  j["hash"] = hex_hash(in.hash);
  j["bound"] = in.bound;
  if (!o.specialize.empty()) j["specialized"] = o.specialize;
  return j;
}

// ---- subcommand bodies ----------------------------------------------------

int run_verify(const CommonOpts& o, const std::string& rank_arg) {
  std::string name = o.input;
  if (!rank_arg.empty()) name += rank_arg;  // accept "verify A 3"
  auto pn = qea::parse_preset_name(name);
  if (!pn) throw qea::parse_error("unknown preset: " + name);

  std::optional<std::map<std::string, qea::Rat>> values;
  if (!o.specialize.empty()) values = parse_specialization(o.specialize);

  qea::PresetReport rep = qea::verify_preset(pn->first, pn->second, o.max_degree,
                                             values ? &*values : nullptr);
  emit(o, o.text ? qea::report_to_text(rep) : qea::report_to_json(rep));
  return rep.pass() ? 0 : 1;
}

int run_complete(const CommonOpts& o) {
  LoadedInput in = resolve(o);
  qea::RewriteSystem sys = completed_system(in, o.cache);
  if (o.text) {
    std::ostringstream os;
    os << "completed to degree " << in.bound << ": " << sys.rules().size()
       << " rules\n";
    for (const qea::RewriteRule& r : sys.rules())
      os << "  " << qea::word_string(r.lhs) << " -> " << r.rhs.to_string() << "\n";
    emit(o, os.str());
  } else {
    ordered_json j = input_header(o, in);
    j["rule_count"] = sys.rules().size();
    j["system"] = ordered_json::parse(qea::system_to_json(sys));
    emit(o, j.dump(2));
  }
  return 0;
}

int run_hard(const CommonOpts& o) {
  LoadedInput in = resolve(o);
  qea::RewriteSystem sys = completed_system(in, o.cache);
  std::vector<qea::Word> hard = qea::hard_super_letters(sys, in.bound);
  if (o.text) {
    std::ostringstream os;
    os << hard.size() << " hard super-letters up to degree " << in.bound << "\n";
    for (const qea::Word& w : hard)
      os << "  " << qea::standard_bracketing(w).to_string() << "\n";
    emit(o, os.str());
  } else {
    ordered_json j = input_header(o, in);
    j["count"] = hard.size();
    ordered_json words = ordered_json::array();
    for (const qea::Word& w : hard) words.push_back(qea::word_string(w));
    j["words"] = std::move(words);
    emit(o, j.dump(2));
  }
  return 0;
}

int run_heights(const CommonOpts& o, unsigned max_power) {
  LoadedInput in = resolve(o);
  qea::RewriteSystem sys = completed_system(in, o.cache);
  std::vector<qea::Word> hard = qea::hard_super_letters(sys, in.bound);
  std::vector<qea::HeightReport> hr = qea::heights(sys, hard, max_power);
  if (o.text) {
    std::ostringstream os;
    for (const qea::HeightReport& h : hr) {
      os << qea::word_string(h.word) << ": ";
      if (h.first_reducible_power)
        os << "power " << *h.first_reducible_power << " reduces\n";
      else
        os << "infinite up to " << h.checked_to << "\n";
    }
    emit(o, os.str());
  } else {
    ordered_json j = input_header(o, in);
    j["max_power"] = max_power;
    ordered_json arr = ordered_json::array();
    for (const qea::HeightReport& h : hr) {
      ordered_json e;
      e["word"] = qea::word_string(h.word);
      e["checked_to"] = h.checked_to;
      if (h.first_reducible_power)
        e["first_reducible_power"] = *h.first_reducible_power;
      else
        e["verdict"] = "infinite up to " + std::to_string(h.checked_to);
      arr.push_back(std::move(e));
    }
    j["heights"] = std::move(arr);
    emit(o, j.dump(2));
  }
  return 0;
}

int run_crystal(const CommonOpts& o) {
  LoadedInput in = resolve(o);
  qea::RewriteSystem sys = completed_system(in, o.cache);
  std::vector<qea::Word> hard = qea::hard_super_letters(sys, in.bound);
  ordered_json j = input_header(o, in);
  std::ostringstream os;
  ordered_json deg = ordered_json::array();
  for (long d = 1; d <= in.bound; ++d) {
    std::vector<qea::Word> words = qea::crystal_words(hard, in.pr.degrees, d);
    if (o.text) {
      os << "degree " << d << " (" << words.size() << "):";
      for (const qea::Word& w : words) os << " " << qea::word_string(w);
      os << "\n";
    } else {
      ordered_json e;
      e["degree"] = d;
      e["count"] = words.size();
      ordered_json arr = ordered_json::array();
      for (const qea::Word& w : words) arr.push_back(qea::word_string(w));
      e["words"] = std::move(arr);
      deg.push_back(std::move(e));
    }
  }
  if (o.text) {
    emit(o, os.str());
  } else {
    j["by_degree"] = std::move(deg);
    emit(o, j.dump(2));
  }
  return 0;
}

int run_dims(const CommonOpts& o) {
  LoadedInput in = resolve(o);
  qea::RewriteSystem sys = completed_system(in, o.cache);
  std::vector<qea::Word> hard = qea::hard_super_letters(sys, in.bound);
  std::vector<long> normal = qea::normal_word_dims(sys, in.bound);
  std::vector<long> pbw = qea::pbw_dims(hard, in.pr.degrees, in.bound);
  bool agree = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream os;
  for (long d = 0; d <= in.bound; ++d) {
    long crystal = static_cast<long>(
        qea::crystal_words(hard, in.pr.degrees, d).size());
    bool row_ok = normal[d] == pbw[d] && pbw[d] == crystal;
    agree = agree && row_ok;
    if (o.text) {
      os << "degree " << d << ": normal " << normal[d] << ", pbw " << pbw[d]
         << ", crystal " << crystal << (row_ok ? "" : "  MISMATCH") << "\n";
    } else {
      ordered_json e;
      e["degree"] = d;
      e["normal"] = normal[d];
      e["pbw"] = pbw[d];
      e["crystal"] = crystal;
      rows.push_back(std::move(e));
    }
  }
  if (o.text) {
    os << (agree ? "all degrees agree\n" : "DIMENSION MISMATCH\n");
    emit(o, os.str());
  } else {
    ordered_json j = input_header(o, in);
    j["dims"] = std::move(rows);
    j["agree"] = agree;
    emit(o, j.dump(2));
  }
  return agree ? 0 : 1;
}

int run_primitives(const CommonOpts& o, const std::string& constitution) {
  LoadedInput in = resolve(o);
  std::vector<unsigned> c = parse_constitution(constitution, in.pr.ngen);
  long cw = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    cw += static_cast<long>(c[i]) * in.pr.degrees[i];
  if (cw > in.bound)
    throw qea::domain_error(
        "constitution weight " + std::to_string(cw) +
        " exceeds the completion bound " + std::to_string(in.bound) +
        "; raise --max-degree");
  qea::RewriteSystem sys = completed_system(in, o.cache);
  std::vector<qea::NcPoly> basis =
      qea::skew_primitive_space(sys, in.pr.bichar, c);
  if (o.text) {
    std::ostringstream os;
    os << "skew-primitive space dimension " << basis.size() << "\n";
    for (const qea::NcPoly& b : basis) os << "  " << b.to_string() << "\n";
    emit(o, os.str());
  } else {
    ordered_json j = input_header(o, in);
    j["constitution"] = c;
    j["dimension"] = basis.size();
    ordered_json arr = ordered_json::array();
    for (const qea::NcPoly& b : basis) arr.push_back(b.to_string());
    j["basis"] = std::move(arr);
    emit(o, j.dump(2));
  }
  return 0;
}

int run_fuzz(const CommonOpts& o, std::size_t rank, unsigned long trials,
             unsigned long seed, bool minus_one) {
  qea::FuzzReport rep = qea::fuzz_identities(
      rank, trials, seed,
      minus_one ? qea::FuzzMode::square_minus_one : qea::FuzzMode::general);
  emit(o, o.text ? qea::fuzz_report_to_text(rep) : qea::fuzz_report_to_json(rep));
  return rep.failures == 0 ? 0 : 1;
}

int run_check_params(const CommonOpts& o) {
  qea::Presentation pr = load_presentation(o.input);
  if (!o.specialize.empty())
    pr = qea::specialize(pr, parse_specialization(o.specialize));
  auto pn = pr.kind ? qea::parse_preset_name(*pr.kind) : std::nullopt;
  if (!pn)
    throw qea::parse_error(
        "check-params needs a series preset (the Cartan matrix comes from the kind)");
  qea::CartanData cd = qea::CartanData::series(pn->first, pn->second);

  bool all = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < cd.n; ++i) {
    for (std::size_t j = 0; j < cd.n; ++j) {
      if (i == j) continue;
      qea::Scalar lhs = pr.bichar.at(i, j) * pr.bichar.at(j, i);
      qea::Scalar rhs = pr.bichar.at(i, i).pow(cd.a[i][j]);
      bool holds = lhs == rhs;
      all = all && holds;
      if (o.text) {
        os << "p" << i + 1 << j + 1 << " p" << j + 1 << i + 1 << " = "
           << lhs.to_string() << (holds ? " == " : " != ") << rhs.to_string()
           << " = p" << i + 1 << i + 1 << "^" << cd.a[i][j] << "\n";
      } else {
        ordered_json e;
        e["i"] = i + 1;
        e["j"] = j + 1;
        e["product"] = lhs.to_string();
        e["diagonal_power"] = rhs.to_string();
        e["holds"] = holds;
        rows.push_back(std::move(e));
      }
    }
  }
  if (o.text) {
    os << (all ? "quantification exists\n" : "quantification conditions FAIL\n");
    emit(o, os.str());
  } else {
    ordered_json j;
    j["input"] = o.input;
    if (pr.kind) j["kind"] = *pr.kind;
    if (!o.specialize.empty()) j["specialized"] = o.specialize;
    j["conditions"] = std::move(rows);
    j["all_hold"] = all;
    emit(o, j.dump(2));
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quantum enveloping algebra engine: presentations, bounded completion, "
      "PBW generators, crystal bases, and skew-primitive spaces"};
  app.require_subcommand(1);

  CommonOpts v_o;
  std::string v_rank;
  CLI::App* v = app.add_subcommand(
      "verify", "run the full verification pipeline for a series preset");
  v->add_option("preset", v_o.input, "preset name (a3) or series letter (A)")
      ->required();
  v->add_option("rank", v_rank, "rank when the first argument is a letter");
  v->add_option("--max-degree", v_o.max_degree, "completion degree bound");
  v->add_option("--out", v_o.out, "also write the report to this file");
  v->add_option("--specialize", v_o.specialize,
                "substitute parameters first: name=rational[,...]");
  v->add_flag("--text", v_o.text, "plain-text report instead of JSON");

  CommonOpts c_o;
  CLI::App* c = app.add_subcommand("complete",
                                   "complete the defining relations to a "
                                   "degree-bounded rewriting system");
  add_common(c, c_o);

  CommonOpts h_o;
  CLI::App* h = app.add_subcommand("hard",
                                   "list the PBW generators (hard super-letters)");
  add_common(h, h_o);

  CommonOpts ht_o;
  unsigned ht_power = 3;
  CLI::App* ht = app.add_subcommand("heights",
                                    "probe powers of each hard super-letter");
  add_common(ht, ht_o);
  ht->add_option("--max-power", ht_power, "largest power to probe (default 3)");

  CommonOpts cr_o;
  CLI::App* cr = app.add_subcommand("crystal",
                                    "crystal basis words degree by degree");
  add_common(cr, cr_o);

  CommonOpts d_o;
  CLI::App* d = app.add_subcommand(
      "dims", "graded dimensions: normal words vs PBW count vs crystal count");
  add_common(d, d_o);

  CommonOpts p_o;
  std::string p_constitution;
  CLI::App* p = app.add_subcommand("primitives",
                                   "basis of a skew-primitive space");
  add_common(p, p_o);
  p->add_option("--constitution", p_constitution,
                "constitution as comma-separated multiplicities, e.g. 1,1")
      ->required();

  CommonOpts f_o;
  std::size_t f_rank = 3;
  unsigned long f_trials = 200;
  unsigned long f_seed = 42;  // documented default seed
  bool f_minus_one = false;
  CLI::App* f = app.add_subcommand("fuzz-identities",
                                   "randomized exact checks of the bracket identities");
  f->add_option("--rank", f_rank, "number of generators (default 3)");
  f->add_option("--trials", f_trials, "number of trials (default 200)");
  f->add_option("--seed", f_seed, "PRNG seed (default 42)");
  f->add_flag("--square-at-minus-one", f_minus_one,
              "restrict to the square identity at p(v,v) = -1");
  f->add_option("--out", f_o.out, "also write the report to this file");
  f->add_flag("--text", f_o.text, "plain-text report instead of JSON");

  CommonOpts cp_o;
  CLI::App* cp = app.add_subcommand(
      "check-params", "test the quantification conditions of a series presentation");
  cp->add_option("input", cp_o.input, "preset name or presentation JSON file")
      ->required();
  cp->add_option("--specialize", cp_o.specialize,
                 "substitute parameters first: name=rational[,...]");
  cp->add_option("--out", cp_o.out, "also write the report to this file");
  cp->add_flag("--text", cp_o.text, "plain-text report instead of JSON");

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

  const auto t0 = std::chrono::steady_clock::now();
  int code = 3;
  std::string label;
  try {
    if (v->parsed()) { label = "verify"; code = run_verify(v_o, v_rank); }
    else if (c->parsed()) { label = "complete"; code = run_complete(c_o); }
    else if (h->parsed()) { label = "hard"; code = run_hard(h_o); }
    else if (ht->parsed()) { label = "heights"; code = run_heights(ht_o, ht_power); }
    else if (cr->parsed()) { label = "crystal"; code = run_crystal(cr_o); }
    else if (d->parsed()) { label = "dims"; code = run_dims(d_o); }
    else if (p->parsed()) { label = "primitives"; code = run_primitives(p_o, p_constitution); }
    else if (f->parsed()) { label = "fuzz-identities"; code = run_fuzz(f_o, f_rank, f_trials, f_seed, f_minus_one); }
    else if (cp->parsed()) { label = "check-params"; code = run_check_params(cp_o); }
  } catch (const qea::invariant_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const qea::error& e) {  // parse_error, domain_error
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  const auto t1 = std::chrono::steady_clock::now();
  std::cerr << label << ": "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << " ms\n";
  return code;
}
