#pragma once

// Run reports: index tuples of output polynomials, JSON and table rendering,
// and a batch runner over system files.

#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "charset/charset.hpp"
#include "charset/system_file.hpp"

namespace charset {

enum class Algorithm { CharSet, CharSetW, RittWu, RittWuW };

inline std::string toString(Algorithm a) {
  switch (a) {
    case Algorithm::CharSet: return "charset";
    case Algorithm::CharSetW: return "charsetw";
    case Algorithm::RittWu: return "rittwu";
    case Algorithm::RittWuW: return "rittwuw";
  }
  return "?";
}

inline std::optional<Algorithm> parseAlgorithm(std::string_view s) {
  for (Algorithm a : {Algorithm::CharSet, Algorithm::CharSetW, Algorithm::RittWu, Algorithm::RittWuW})
    if (toString(a) == s) return a;
  return std::nullopt;
}

inline std::string toString(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Contradictory: return "contradictory";
    case Status::IterationLimit: return "iteration-limit";
  }
  return "?";
}

enum class ReportFormat { Json, Table };

/// Options shared by every run of a batch.
struct RunOptions {
  LoopCondition cond = LoopCondition::FindExhaustion;
  std::size_t bound = 0;
  SortStrategy sort = SortStrategy::Refine;
  bool certificates = false;
  bool trace = false;
  /// When false, millis is reported as 0 so reports are reproducible.
  bool timing = true;
  std::size_t maxLoops = 1000;
};

inline std::string conditionString(LoopCondition cond, std::size_t bound) {
  switch (cond) {
    case LoopCondition::FindExhaustion: return "find";
    case LoopCondition::Never: return "never";
    case LoopCondition::Bounded: return "bound=" + std::to_string(bound);
  }
  return "?";
}

/// Library options for an algorithm variant; the Ritt-Wu variants never
/// call find.
inline Options toOptions(Algorithm a, const RunOptions& ro) {
  Options o;
  o.flavor = (a == Algorithm::CharSetW || a == Algorithm::RittWuW) ? Flavor::Weak : Flavor::Strong;
  o.cond = (a == Algorithm::RittWu || a == Algorithm::RittWuW) ? LoopCondition::Never : ro.cond;
  o.bound = ro.bound;
  o.sort = ro.sort;
  o.certificates = ro.certificates;
  o.maxCharSetLoops = ro.maxLoops;
  return o;
}

struct IndexTuple {
  std::vector<Exponent> degrees;
  std::size_t nops = 0;
  std::string lm;
  std::size_t maxDigits = 0;
  std::string poly;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
};

inline IndexTuple indexTuple(const Polynomial& p, const VariableOrder& order) {
  const Measure m = measure(p);
  return IndexTuple{m.degreeTuple, m.nops, renderMonomial(m.leadMonomial, order), m.maxDigits,
                    renderPolynomial(p, order)};
}

struct TraceLine {
  std::size_t loop = 0;
  std::string kind;
  std::string reductend;
  std::string reductor;
  std::string r1;
  std::string r2;
  bool bFlag = false;
  bool basisReplaced = false;
};

struct RunReport {
  std::string system;
  Algorithm algorithm = Algorithm::CharSet;
  RunOptions options;
  Status status = Status::Ok;
  std::size_t loops = 0;
  long long millis = 0;
  std::vector<IndexTuple> output;
  std::vector<TraceLine> trace;
  /// With certificates: whether every output re-expands over the inputs.
  std::optional<bool> certified;
};

inline RunReport runSystem(const std::string& name, const PolynomialSystem& sys, Algorithm alg,
                           const RunOptions& ro) {
  RunReport r;
  r.system = name;
  r.algorithm = alg;
  r.options = ro;
  if (sys.polynomials.empty()) throw EmptyInput("system '" + name + "' has no polynomials");
  const auto start = std::chrono::steady_clock::now();
  CharSetResult res = charSet(sys.polynomials, toOptions(alg, ro));
  const auto stop = std::chrono::steady_clock::now();
  if (ro.timing) r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  r.status = res.status;
  r.loops = res.loops;
  for (const auto& p : res.gcs.elements()) r.output.push_back(indexTuple(p, sys.order));
  if (ro.trace) {
    for (const auto& s : res.trace.steps) {
      r.trace.push_back(TraceLine{s.charSetLoop, std::string(toString(s.triple.kind)), renderPolynomial(s.triple.reductend, sys.order),
                                  renderPolynomial(s.triple.reductor, sys.order), renderPolynomial(s.r1, sys.order),
                                  renderPolynomial(s.r2, sys.order), s.bFlag, s.basisReplaced});
    }
  }
  if (res.certificates) {
    bool ok = true;
    const auto elems = res.gcs.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) ok = ok && (*res.certificates)[i].certifies(elems[i], res.inputs);
    r.certified = ok;
  }
  return r;
}

/// The loop condition a report actually ran with.
inline std::string conditionString(const RunReport& r) {
  const Options o = toOptions(r.algorithm, r.options);
  return conditionString(o.cond, o.bound);
}

inline nlohmann::ordered_json toJson(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["system"] = r.system;
  j["algorithm"] = toString(r.algorithm);
  ordered_json opts;
  opts["cond"] = conditionString(r);
  opts["sort"] = r.options.sort == SortStrategy::Refine ? "refine" : "degtuple";
  opts["certificates"] = r.options.certificates;
  j["options"] = opts;
  j["status"] = toString(r.status);
  j["loops"] = r.loops;
  j["millis"] = r.millis;
  ordered_json out = ordered_json::array();
  for (const auto& t : r.output) {
    ordered_json e;
    e["degrees"] = t.degrees;
    e["nops"] = t.nops;
    e["lm"] = t.lm;
    e["maxDigits"] = t.maxDigits;
    e["poly"] = t.poly;
    out.push_back(std::move(e));
  }
  j["output"] = std::move(out);
  if (r.certified) j["certified"] = *r.certified;
  if (r.options.trace) {
    ordered_json tr = ordered_json::array();
    for (const auto& s : r.trace) {
      ordered_json e;
      e["loop"] = s.loop;
      e["reduction"] = s.kind;
      e["reductend"] = s.reductend;
      e["reductor"] = s.reductor;
      e["rest"] = {s.r1, s.r2};
      e["bFlag"] = s.bFlag;
      e["basisReplaced"] = s.basisReplaced;
      tr.push_back(std::move(e));
    }
    j["trace"] = std::move(tr);
  }
  return j;
}

namespace detail {

inline std::string degreeString(const std::vector<Exponent>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s + "]";
}

inline std::string tableText(const RunReport& r) {
  std::ostringstream os;
  os << "system: " << r.system << "  algorithm: " << toString(r.algorithm) << "  cond: " << conditionString(r)
     << "  status: " << toString(r.status) << "  loops: " << r.loops << "  millis: " << r.millis << '\n';
  std::size_t wDeg = 7, wLm = 9;
  for (const auto& t : r.output) {
    wDeg = std::max(wDeg, degreeString(t.degrees).size());
    wLm = std::max(wLm, t.lm.size());
  }
  os << std::left << std::setw(4) << "No" << std::setw(wDeg + 2) << "degrees" << std::right << std::setw(8) << "nops"
     << "  " << std::left << std::setw(wLm + 2) << "head term" << "digits\n";
  for (std::size_t i = 0; i < r.output.size(); ++i) {
    const auto& t = r.output[i];
    os << std::left << std::setw(4) << (i + 1) << std::setw(wDeg + 2) << degreeString(t.degrees) << std::right
       << std::setw(8) << t.nops << "  " << std::left << std::setw(wLm + 2) << t.lm << t.maxDigits << '\n';
  }
  if (r.certified) os << "certified: " << (*r.certified ? "yes" : "no") << '\n';
  for (const auto& s : r.trace) {
    os << "  loop " << s.loop << ' ' << s.kind << " [" << s.reductend << "] by [" << s.reductor << "] -> [" << s.r1
       << "], [" << s.r2 << "]" << (s.bFlag ? " b" : "") << (s.basisReplaced ? " G" : "") << '\n';
  }
  return os.str();
}

}  // namespace detail

inline std::string renderReport(const RunReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return toJson(r).dump(2) + '\n';
  return detail::tableText(r);
}

/// Several reports: a JSON array, or tables separated by blank lines.
inline std::string renderReports(std::span<const RunReport> reports, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(toJson(r));
    return arr.dump(2) + '\n';
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += '\n';
    out += detail::tableText(reports[i]);
  }
  return out;
}

struct InputError {
  std::string path;
  std::string message;
};

struct BenchmarkResult {
  std::vector<RunReport> reports;
  std::vector<InputError> errors;
};

/// One named input; `text` holds the system file contents.
struct SystemSource {
  std::string name;
  std::string text;
};

inline std::string describe(const std::exception& e) {
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e))
    return "line " + std::to_string(s->line()) + ", column " + std::to_string(s->column()) + ": " + s->what();
  return e.what();
}

/// Runs every source under every algorithm. Tasks execute concurrently;
/// reports keep source-major, algorithm-minor order.
inline BenchmarkResult runBenchmark(const std::vector<SystemSource>& sources, const std::vector<Algorithm>& algs,
                                    const RunOptions& ro) {
  BenchmarkResult out;
  struct Parsed {
    std::string name;
    PolynomialSystem sys;
  };
  std::vector<Parsed> parsed;
  for (const auto& src : sources) {
    try {
      PolynomialSystem sys = parseSystem(src.text);
      if (sys.polynomials.empty()) throw EmptyInput("no polynomials");
      parsed.push_back({src.name, std::move(sys)});
    } catch (const Error& e) {
      out.errors.push_back({src.name, describe(e)});
    }
  }
  std::vector<std::future<RunReport>> tasks;
  for (const auto& p : parsed)
    for (Algorithm a : algs)
      tasks.push_back(std::async(std::launch::async, [&p, a, &ro] { return runSystem(p.name, p.sys, a, ro); }));
  for (auto& t : tasks) out.reports.push_back(t.get());
  return out;
}

/// Reads each path ("-" for standard input) and runs the batch; unreadable
/// files are reported as input errors.
inline BenchmarkResult runBenchmark(const std::vector<std::string>& paths, const std::vector<Algorithm>& algs,
                                    const RunOptions& ro, std::istream& stdinStream) {
  std::vector<SystemSource> sources;
  std::vector<InputError> readErrors;
  for (const auto& path : paths) {
    std::ostringstream buf;
    if (path == "-") {
      buf << stdinStream.rdbuf();
    } else {
      std::ifstream in(path);
      if (!in) {
        readErrors.push_back({path, "cannot open file"});
        continue;
      }
      buf << in.rdbuf();
    }
    sources.push_back({path, buf.str()});
  }
  BenchmarkResult r = runBenchmark(sources, algs, ro);
  r.errors.insert(r.errors.begin(), readErrors.begin(), readErrors.end());
  return r;
}

}  // namespace charset
