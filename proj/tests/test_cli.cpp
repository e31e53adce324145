#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hyperex/hyperex.hpp"

using namespace hyperex;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  CliRun r;
  FILE* pipe = popen((std::string(HYPEREX_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_graph(const std::string& file, const std::string& text) {
  const auto dir = std::filesystem::path("cli_graphs");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / file) << text;
  return (dir / file).string();
}

std::string write_graph(const std::string& file, const Graph& g) { return write_graph(file, g.to_edge_list()); }

}  // namespace

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(cli("--help").code, 0);
  EXPECT_EQ(cli("delta --help").code, 0);
  EXPECT_EQ(cli("").code, 64);
  EXPECT_EQ(cli("delta --no-such-flag").code, 64);
  EXPECT_EQ(cli("frobnicate").code, 64);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(cli("delta --graph cli_graphs/does-not-exist.txt").code, 1);
  EXPECT_EQ(cli("delta --graph " + write_graph("bad.txt", "0 1\n1 x\n")).code, 1);
  EXPECT_EQ(cli("delta --graph " + write_graph("split.txt", "0 1\n2 3\n")).code, 1);
}

TEST(Cli, DomainErrors) {
  const std::string c8 = write_graph("c8.txt", gen::cycle(8));
  EXPECT_EQ(cli("ehssc --graph " + c8 + " --s 0 --t 99 --k 1").code, 2);
  EXPECT_EQ(cli("sse --graph " + c8 + " --epsilon 2").code, 2);
  EXPECT_EQ(cli("sse --graph " + write_graph("p5.txt", gen::path(5))).code, 2);
  EXPECT_EQ(cli("uumv --graph " + c8 + " --s 0 --t 4 --r 3 --kappa 2").code, 2);
}

TEST(Cli, DeltaOfPathIsZero) {
  const CliRun r = cli("delta --graph " + write_graph("p6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["delta"], "0");
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["graph"]["n"], 6);
}

TEST(Cli, LabelsAreEchoedNotIds) {
  const CliRun r = cli("delta --graph " + write_graph("labels.txt", "10 20\n20 30\n30 40\n40 10\n"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["delta"], "1");
  for (const auto& v : j["witness"]) EXPECT_EQ(v.get<int>() % 10, 0);
}

TEST(Cli, UumvCycleSharesFour) {
  const CliRun r = cli("uumv --graph " + write_graph("c8.txt", gen::cycle(8)) + " --s 0 --t 4 --r 1 --kappa 3");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["result"]["shared"], 4);
  EXPECT_EQ(j["result"]["paths"].size(), 3u);
}

TEST(Cli, CutsOnLongPath) {
  const CliRun r = cli("cuts --graph " + write_graph("p200.txt", gen::path(200)) + " --s 0 --t 199");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_GE(j["count"].get<int>(), 6);
  EXPECT_EQ(j["certified"], true);
}

TEST(Cli, TableFormatFlattens) {
  const CliRun r = cli("delta --format table --graph " + write_graph("c8.txt", gen::cycle(8)));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("graph.n  8"), std::string::npos);
  EXPECT_NE(r.out.find("delta  \"2\""), std::string::npos);
}

TEST(Cli, GenRoundTrip) {
  const CliRun r = cli("gen --family grid --rows 4 --cols 6");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(load_graph(r.out).edges(), gen::grid(4, 6).edges());
  const CliRun er = cli("gen --family erdos-renyi --n 25 --p 0.2 --seed 7");
  ASSERT_EQ(er.code, 0);
  EXPECT_EQ(load_graph(er.out).edges(), gen::erdos_renyi(25, Ratio(1, 5), 7).edges());
}

TEST(Cli, RepeatedRunsMatch) {
  const std::string q4 = write_graph("q4.txt", gen::hypercube(4));
  for (const std::string& args : {"sse --graph " + q4 + " --epsilon 1/2", "delta --workers 2 --graph " + q4,
                                 "oracle --op min-expansion --graph " + q4}) {
    const CliRun a = cli(args), b = cli(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}
