// Copyright 2026 The Pants Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pants/cli.h"

#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pants/census.h"
#include "pants/error.h"
#include "pants/intersection.h"
#include "pants/io.h"
#include "pants/oracle.h"
#include "pants/rational.h"

namespace pants {
namespace {

struct GlobalFlags {
  bool json = false;
  std::string out_path;
  std::string config_path;
  int threads = 1;
};

class Emitter {
 public:
  Emitter(const GlobalFlags& flags, std::ostream& out)
      : flags_(flags), out_(out) {}

  std::ostream& stream() { return buffer_; }

  void Json(const pants::Json& json) { buffer_ << json.dump(2) << '\n'; }

  void Flush() {
    if (flags_.out_path.empty()) {
      out_ << buffer_.str();
      return;
    }
    std::ofstream file(flags_.out_path, std::ios::binary);
    if (!file) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot write '" + flags_.out_path + "'");
    }
    file << buffer_.str();
  }

 private:
  const GlobalFlags& flags_;
  std::ostream& out_;
  std::ostringstream buffer_;
};

CyclicWord ReadWord(const std::string& text, std::ostream& err) {
  const Word letters = ParseWord(text);
  CyclicWord w = CyclicWord::FromText(text);
  if (!IsCyclicallyReduced(letters)) {
    err << "note: '" << text << "' reduced to cyclic class '" << w.str()
        << "'\n";
  }
  return w;
}

ConfigParams Config(const GlobalFlags& flags) {
  return flags.config_path.empty() ? DefaultConfigParams()
                                   : LoadConfig(flags.config_path);
}

std::string Join(const std::vector<CyclicWord>& words) {
  std::string s;
  for (const CyclicWord& w : words) {
    if (!s.empty()) s += ", ";
    s += w.str();
  }
  return s;
}

void PrintReport(std::ostream& os, const IntersectionReport& r) {
  os << "word = " << r.word.str() << '\n'
     << "root = " << r.root.str() << '\n'
     << "multiplicity = " << r.multiplicity << '\n'
     << "n = " << r.n << '\n'
     << "L = " << r.length << '\n'
     << "H = " << r.h << '\n';
  for (const auto& [label, count] : r.set_counts) {
    os << "  " << label << " = " << count << '\n';
  }
  os << "closed_form = " << r.closed_form << '\n'
     << "i = " << r.i << '\n'
     << "bounds = [" << r.lower_bound << ", " << r.upper_bound << "]\n"
     << "parity_bounds = [" << r.parity_lower << ", " << r.parity_upper
     << "]\n";
}

int Intersect(const GlobalFlags& flags, const std::string& text, bool report,
              std::ostream& out, std::ostream& err) {
  const IntersectionReport r = SelfIntersection(ReadWord(text, err));
  Emitter emit(flags, out);
  if (flags.json) {
    emit.Json(ToJson(r));
  } else if (report) {
    PrintReport(emit.stream(), r);
  } else {
    emit.stream() << "i = " << r.i << '\n';
  }
  emit.Flush();
  return kExitOk;
}

int Oracle(const GlobalFlags& flags, const std::string& text,
           std::ostream& out, std::ostream& err) {
  const CyclicWord w = ReadWord(text, err);
  const std::int64_t i = SelfIntersection(w).i;
  const std::int64_t o = OracleWithRetry(w, Config(flags));
  Emitter emit(flags, out);
  if (flags.json) {
    emit.Json({{"word", w.str()}, {"i", i}, {"oracle", o}, {"agree", i == o}});
  } else {
    emit.stream() << "oracle = " << o << '\n' << "i = " << i << '\n';
  }
  emit.Flush();
  return i == o ? kExitOk : kExitViolation;
}

int Enumerate(const GlobalFlags& flags, int length,
              const EnumerateOptions& base, std::ostream& out) {
  EnumerateOptions options = base;
  options.threads = flags.threads;
  const std::vector<CensusRow> rows = Census(length, options);
  Emitter emit(flags, out);
  if (flags.json) {
    emit.Json(ToJson(rows));
  } else {
    WriteCsv(emit.stream(), rows);
  }
  emit.Flush();
  return kExitOk;
}

int SpectrumCommand(const GlobalFlags& flags, int length, std::ostream& out) {
  const Spectrum s = ComputeSpectrum(length, flags.threads);
  Emitter emit(flags, out);
  if (flags.json) {
    emit.Json(ToJson(s));
  } else {
    std::ostream& os = emit.stream();
    os << "L = " << s.length << '\n'
       << "max = " << s.max << " (" << Join(s.max_witnesses) << ")\n";
    if (s.min_nonsimple) {
      os << "min = " << *s.min_nonsimple << " (" << Join(s.min_witnesses)
         << ")\n";
    } else {
      os << "min = none\n";
    }
  }
  emit.Flush();
  return kExitOk;
}

int Verify(const GlobalFlags& flags, int max_length, bool oracle,
           std::ostream& out) {
  if (oracle && max_length > 8) {
    throw Error(ErrorCode::kLengthOutOfRange,
                "--oracle supports --max-length up to 8");
  }
  VerifyReport report = VerifyBounds(max_length, flags.threads);
  if (oracle) VerifyOracle(report, Config(flags), flags.threads);
  Emitter emit(flags, out);
  if (flags.json) {
    emit.Json(ToJson(report));
  } else {
    std::ostream& os = emit.stream();
    os << "classes = " << report.classes << '\n'
       << "violations = " << report.violations.size() << '\n';
    for (const Violation& v : report.violations) {
      os << "  " << v.row.word.str() << " i=" << v.row.i << " H=" << v.row.h
         << " :";
      for (const std::string& c : v.checks) os << ' ' << c;
      os << '\n';
    }
    if (report.oracle_checked) {
      os << "oracle_mismatches = " << report.oracle_mismatches.size() << '\n';
      for (const OracleMismatch& m : report.oracle_mismatches) {
        os << "  " << m.word.str() << " i=" << m.i << " oracle="
           << (m.oracle ? std::to_string(*m.oracle) : m.error) << '\n';
      }
    }
  }
  emit.Flush();
  for (const OracleMismatch& m : report.oracle_mismatches) {
    if (!m.oracle) return kExitOracle;
  }
  return report.ok() ? kExitOk : kExitViolation;
}

int Epsilon(const GlobalFlags& flags, int length, const std::string& eps_text,
            std::ostream& out) {
  const EpsilonReport r =
      EpsilonCensus(length, Rational::Parse(eps_text), flags.threads);
  Emitter emit(flags, out);
  if (flags.json) {
    emit.Json(ToJson(r));
  } else {
    emit.stream() << "L = " << r.length << '\n'
                  << "epsilon = " << r.epsilon.str() << '\n'
                  << "count_A = " << r.count_a << '\n'
                  << "count_B = " << r.count_b << '\n'
                  << "total = " << r.total << '\n'
                  << "paper_total = " << r.paper_total.str() << '\n';
  }
  emit.Flush();
  return r.count_a <= r.count_b ? kExitOk : kExitViolation;
}

int Counts(const GlobalFlags& flags, int length, std::ostream& out) {
  const ClassCounts c = CountClasses(length, flags.threads);
  Emitter emit(flags, out);
  if (flags.json) {
    emit.Json(ToJson(c));
  } else {
    emit.stream() << "L = " << c.length << '\n'
                  << "all = " << c.all << '\n'
                  << "primitive = " << c.primitive << '\n'
                  << "simple = " << c.simple << '\n'
                  << "paper_formula = " << c.paper_formula.str() << '\n';
  }
  emit.Flush();
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Self-intersection numbers of closed geodesics on a pair of "
               "pants. Letters: a, b and their inverses A, B."};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Machine-readable JSON output");
  app.add_option("--out", flags.out_path, "Write the payload to this file");
  app.add_option("--config", flags.config_path,
                 "Oracle geometry as JSON {angles_deg, radii}");
  app.add_option("--threads", flags.threads, "Census worker threads")
      ->check(CLI::Range(1, 256));

  std::string word;
  bool report = false;
  auto* intersect = app.add_subcommand("intersect", "Self-intersection of a word");
  intersect->add_option("word", word, "Word over aAbB")->required();
  intersect->add_flag("--report", report, "Full breakdown");

  auto* oracle = app.add_subcommand("oracle", "Hyperbolic oracle count");
  oracle->add_option("word", word, "Word over aAbB")->required();

  int length = 0;
  EnumerateOptions enum_options;
  bool no_simple = false;
  auto* enumerate = app.add_subcommand("enumerate", "Census rows as CSV");
  enumerate->add_option("--length", length, "Combinatorial length")
      ->required();
  enumerate->add_flag("--primitive-only", enum_options.primitive_only);
  enumerate->add_flag("--unoriented", enum_options.unoriented);
  enumerate->add_flag("--no-simple", no_simple);

  auto* spectrum = app.add_subcommand("spectrum", "Extreme values at a length");
  spectrum->add_option("--length", length)->required();

  int max_length = 0;
  bool with_oracle = false;
  auto* verify = app.add_subcommand("verify", "Check the bounds exhaustively");
  verify->add_option("--max-length", max_length)->required();
  verify->add_flag("--oracle", with_oracle, "Also compare with the oracle");

  std::string eps_text;
  auto* epsilon = app.add_subcommand("epsilon", "Near-maximal census");
  epsilon->add_option("--length", length)->required();
  epsilon->add_option("--epsilon", eps_text, "Rational p/q")->required();

  auto* counts = app.add_subcommand("counts", "Class counts at a length");
  counts->add_option("--length", length)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*intersect) return Intersect(flags, word, report, out, err);
    if (*oracle) return Oracle(flags, word, out, err);
    if (*enumerate) {
      enum_options.include_simple = !no_simple;
      return Enumerate(flags, length, enum_options, out);
    }
    if (*spectrum) return SpectrumCommand(flags, length, out);
    if (*verify) return Verify(flags, max_length, with_oracle, out);
    if (*epsilon) return Epsilon(flags, length, eps_text, out);
    if (*counts) return Counts(flags, length, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.IsNumerical() ? kExitOracle : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pants
