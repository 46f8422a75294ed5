// pcat: command line workbench for two-colored partitions.
//
// Subcommands: parse, show, op, analyze, closure, classify, verify,
// enumerate.  Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pcat/analyzer.hpp"
#include "pcat/closure.hpp"
#include "pcat/ops.hpp"
#include "pcat/qspace.hpp"
#include "pcat/verify.hpp"

namespace {

using namespace pcat;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<PointRef> parsePointList(const std::string& text) {
  std::vector<PointRef> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(0, 1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    if (!tok.empty()) out.push_back(parsePointName(tok));
  }
  return out;
}

Turn parseTurn(const Partition& p, const std::string& text) {
  auto pts = parsePointList(text);
  if (pts.size() != 2) throw Error("a turn needs exactly two points, e.g. --turn l2,l3");
  if (!isTurn(p, pts[0], pts[1])) throw Error("not a turn: " + text);
  return Turn{pts[0], pts[1]};
}

// Rows of drawn colors with one rail per block between them.
std::string renderAscii(const Partition& p) {
  if (p.empty()) return "(empty partition)\n";
  const int cols = std::max(p.upperSize(), p.lowerSize()) * 2 - 1;
  const int rails = p.blockCount();
  const int height = rails + 2;
  std::vector<std::string> canvas(height, std::string(cols, ' '));

  auto columnOf = [](const PointRef& pt) { return 2 * (pt.index - 1); };
  for (int i = 1; i <= p.upperSize(); ++i)
    canvas[0][2 * (i - 1)] = colorChar(p.upperColors()[i - 1]);
  for (int i = 1; i <= p.lowerSize(); ++i)
    canvas[height - 1][2 * (i - 1)] = colorChar(p.lowerColors()[i - 1]);

  for (int b = 0; b < p.blockCount(); ++b) {
    const int railRow = 1 + b;
    int lo = cols, hi = -1;
    for (const PointRef& pt : p.blocks()[b]) {
      int col = columnOf(pt);
      lo = std::min(lo, col);
      hi = std::max(hi, col);
      int from = pt.row == RowKind::upper ? 1 : height - 2;
      int step = pt.row == RowKind::upper ? 1 : -1;
      for (int r = from; r != railRow; r += step)
        if (canvas[r][col] == ' ') canvas[r][col] = '|';
    }
    for (int colI = lo; colI <= hi; ++colI)
      canvas[railRow][colI] = canvas[railRow][colI] == ' ' ? '-' : '+';
    for (const PointRef& pt : p.blocks()[b]) canvas[railRow][columnOf(pt)] = '+';
  }

  std::string out;
  for (int r = 0; r < height; ++r) {
    if (r == 0 && p.upperSize() == 0) continue;
    if (r == height - 1 && p.lowerSize() == 0) continue;
    std::string line = canvas[r];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

Budget parseBudget(const std::string& spec) {
  Budget b;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error("budget entries look like key=value: " + tok);
    std::string key = tok.substr(0, eq);
    std::int64_t val = std::stoll(tok.substr(eq + 1));
    if (key == "maxPoints")
      b.maxPoints = static_cast<int>(val);
    else if (key == "cap")
      b.closureCap = static_cast<int>(val);
    else if (key == "window")
      b.window = val;
    else if (key == "instances")
      b.instances = static_cast<int>(val);
    else
      throw Error("unknown budget key '" + key + "'");
  }
  return b;
}

int runMain(int argc, char** argv) {
  CLI::App app{"workbench for categories of two-colored partitions"};
  app.require_subcommand(1);

  // parse
  auto* cmdParse = app.add_subcommand("parse", "validate a corpus of partition literals");
  std::string parseFile;
  cmdParse->add_option("file", parseFile, "corpus file, one literal per line")->required();

  // show
  auto* cmdShow = app.add_subcommand("show", "render a partition as an ASCII diagram");
  std::string showLit;
  cmdShow->add_option("literal", showLit, "partition literal")->required();

  // op
  auto* cmdOp = app.add_subcommand("op", "apply a category operation");
  std::string opName, corner = "up_left", turnSpec, pointSpec, setSpec;
  std::vector<std::string> opArgs;
  cmdOp->add_option("operation", opName,
                    "tensor|compose|invol|rotate|reflect|erase|project|disconnect|connect")
      ->required();
  cmdOp->add_option("--corner", corner, "up_left|up_right|down_left|down_right");
  cmdOp->add_option("--turn", turnSpec, "two points, e.g. l2,l3");
  cmdOp->add_option("--point", pointSpec, "a point, e.g. l1");
  cmdOp->add_option("--points", setSpec, "consecutive points, e.g. l1,l2 (empty for {})");
  cmdOp->add_option("literals", opArgs, "partition literals");

  // analyze
  auto* cmdAnalyze = app.add_subcommand("analyze", "analysis report of a corpus");
  std::string analyzeFile;
  bool refined = false;
  cmdAnalyze->add_option("file", analyzeFile, "corpus file")->required();
  cmdAnalyze->add_flag("--refined", refined, "include the color-refined tables");

  // closure
  auto* cmdClosure = app.add_subcommand("closure", "bounded closure of a generator set");
  std::string genFile, outFile;
  int cap = 6, rounds = 64;
  cmdClosure->add_option("--gen", genFile, "generator corpus (may be empty)")->required();
  cmdClosure->add_option("--cap", cap, "max total points")->required();
  cmdClosure->add_option("--rounds", rounds, "round limit");
  cmdClosure->add_option("--out", outFile, "write the closure dump here");

  // classify
  auto* cmdClassify = app.add_subcommand("classify", "match tuples or data against the rows");
  std::string tupleSpec, zdataFile;
  cmdClassify->add_option("--tuple", tupleSpec, "six ';'-separated integer-set literals");
  cmdClassify->add_option("--zdata", zdataFile, "corpus file; analyzed and matched by rows");

  // verify
  auto* cmdVerify = app.add_subcommand("verify", "run the check catalog");
  std::string checkName, budgetSpec;
  std::uint64_t seed = 1;
  cmdVerify->add_option("--check", checkName, "a single check name");
  cmdVerify->add_option("--budget", budgetSpec, "e.g. maxPoints=5,cap=5,instances=100");
  cmdVerify->add_option("--seed", seed, "random seed");

  // enumerate
  auto* cmdEnum = app.add_subcommand("enumerate", "stream partitions of given row sizes");
  int lowerN = 0, upperN = 0;
  std::string filter = "all";
  cmdEnum->add_option("--lower", lowerN, "lower row length")->required();
  cmdEnum->add_option("--upper", upperN, "upper row length");
  cmdEnum->add_option("--filter", filter, "p2|s0|all");

  app.parse(argc, argv);

  if (*cmdParse) {
    std::istringstream in(readFile(parseFile));
    std::string line;
    int lineNo = 0, count = 0;
    while (std::getline(in, line)) {
      ++lineNo;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::string trimmed;
      for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch)) || !trimmed.empty()) trimmed += ch;
      while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
      if (trimmed.empty()) continue;
      try {
        parsePartition(trimmed);
        ++count;
      } catch (const Error& e) {
        throw Error("line " + std::to_string(lineNo) + ": " + e.what());
      }
    }
    std::cout << "ok: " << count << " partitions\n";
    return 0;
  }
  if (*cmdShow) {
    std::cout << renderAscii(parsePartition(showLit));
    return 0;
  }
  if (*cmdOp) {
    auto arg = [&](std::size_t i) -> Partition {
      if (opArgs.size() <= i) throw Error("operation needs more partition literals");
      return parsePartition(opArgs[i]);
    };
    Partition result;
    if (opName == "tensor")
      result = tensor(arg(0), arg(1));
    else if (opName == "compose")
      result = compose(arg(0), arg(1));
    else if (opName == "invol")
      result = involution(arg(0));
    else if (opName == "rotate") {
      Corner c = corner == "up_left"      ? Corner::up_left
                 : corner == "up_right"   ? Corner::up_right
                 : corner == "down_left"  ? Corner::down_left
                 : corner == "down_right" ? Corner::down_right
                                          : throw Error("bad corner '" + corner + "'");
      result = rotate(arg(0), c);
    } else if (opName == "reflect")
      result = reflect(arg(0));
    else if (opName == "erase") {
      Partition p = arg(0);
      result = eraseTurn(p, parseTurn(p, turnSpec));
    } else if (opName == "project") {
      result = project(arg(0), parsePointList(setSpec));
    } else if (opName == "disconnect") {
      result = disconnectPoint(arg(0), parsePointName(pointSpec));
    } else if (opName == "connect") {
      Partition p = arg(0);
      result = connectTurn(p, parseTurn(p, turnSpec));
    } else {
      throw Error("unknown operation '" + opName + "'");
    }
    std::cout << result.toString() << "\n";
    return 0;
  }
  if (*cmdAnalyze) {
    auto parts = parseCorpus(readFile(analyzeFile));
    std::cout << analyze(parts).report(refined);
    return 0;
  }
  if (*cmdClosure) {
    auto gens = parseCorpus(readFile(genFile));
    ClosureResult r = closure(gens, ClosureOptions{cap, rounds});
    std::cout << "members: " << r.members.size() << "\n";
    std::cout << "rounds: " << r.rounds << (r.reachedFixpoint ? " (fixpoint)" : " (round limit)")
              << "\n";
    std::cout << "case: " << caseName(detectCase(r.members)) << "\n";
    for (const auto& [op, n] : r.producedBy) std::cout << "produced by " << op << ": " << n << "\n";
    if (!outFile.empty()) {
      std::ofstream out(outFile);
      if (!out) throw Error("cannot write '" + outFile + "'");
      out << dumpClosure(r);
    }
    return 0;
  }
  if (*cmdClassify) {
    if (tupleSpec.empty() == zdataFile.empty())
      throw CLI::ValidationError("classify", "give exactly one of --tuple or --zdata");
    if (!tupleSpec.empty()) {
      auto q = classify(QTuple::parse(tupleSpec));
      if (!q) {
        std::cout << "no match\n";
        return 1;
      }
      std::cout << q->toString() << "\n";
      return 0;
    }
    auto parts = parseCorpus(readFile(zdataFile));
    Analysis a = analyze(parts);
    std::cout << a.report(false);
    auto rows = consistentRows(a);
    if (rows.empty()) {
      std::cout << "consistent rows: none\n";
      return 1;
    }
    for (const auto& q : rows) std::cout << q.toString() << "\n";
    return 0;
  }
  if (*cmdVerify) {
    Budget b = budgetSpec.empty() ? Budget{} : parseBudget(budgetSpec);
    b.seed = seed;
    std::vector<CheckReport> reports;
    if (checkName.empty())
      reports = runAllChecks(b);
    else
      reports.push_back(runCheck(checkName, b));
    bool anyFail = false;
    for (const auto& r : reports) {
      std::cout << r.line() << "\n";
      anyFail = anyFail || r.status == CheckStatus::fail;
    }
    return anyFail ? 1 : 0;
  }
  if (*cmdEnum) {
    auto pred = [&](const Partition& p) {
      if (filter == "all") return true;
      if (filter == "p2") {
        for (const auto& blk : p.blocks())
          if (blk.size() > 2) return false;
        return true;
      }
      if (filter == "s0") return inSZero(p);
      throw Error("unknown filter '" + filter + "'");
    };
    enumeratePartitions(upperN, lowerN, [&](const Partition& p) {
      if (pred(p)) std::cout << p.toString() << "\n";
      return true;
    });
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return runMain(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << e.what() << "\n";
      return 0;
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const pcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
