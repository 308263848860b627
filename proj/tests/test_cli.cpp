#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homequiv/cli.hpp"

using homequiv::cli::run;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("homequiv_cli_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("milnor") {
  const Run a = call({"milnor", "x^3+y^3"});
  CHECK(a.code == 0);
  CHECK(a.out.find("result.hilbert: 1 2 1 0\n") != std::string::npos);
  CHECK(a.out.find("result.milnor: 4\n") != std::string::npos);

  const Run b = call({"milnor", "x^2*y", "--json"});
  CHECK(b.code == 0);
  const auto j = nlohmann::json::parse(b.out);
  CHECK(j["result"]["artinian"] == false);
  CHECK(j["result"]["milnor"] == "infinite");

  const Run c = call({"milnor", "x^2+y^3"});
  CHECK(c.code == 2);
  CHECK(c.out.empty());
  CHECK(c.err.find("non-homogeneous") != std::string::npos);

  CHECK(call({"milnor", "x^3+y^3", "--max-degree", "5"}).out.find("result.hilbert: 1 2 1 0 0 0\n") != std::string::npos);
  CHECK(call({"milnor", "1"}).code == 3);
  CHECK(call({"milnor"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
}

TEST_CASE("decide") {
  const Run a = call({"decide", "x^3+y^3", "2*x^3+3*y^3", "--json"});
  CHECK(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["result"]["verdict"] == "equivalent");
  CHECK(j["result"]["exceptional"] == "t^2+3/2*t+1/2");
  CHECK(j["result"]["generic_rank"] == 4);

  const Run b = call({"decide", "x^2*y", "x^2*y+x^3"});
  CHECK(b.code == 0);
  CHECK(b.out.find("result.exceptional: 1\n") != std::string::npos);

  const Run c = call({"decide", "x^3+y^3", "x^3+x^2*y"});
  CHECK(c.code == 4);
  CHECK(c.out.find("result.verdict: hypothesis-not-met\n") != std::string::npos);

  // A leading minus is polynomial text, not an option.
  CHECK(call({"decide", "x^3+y^3", "-x^3-y^3"}).out.find("result.path: detour\n") != std::string::npos);

  CHECK(call({"decide", "x^3", "y^3", "--vars", "x"}).code == 2);
  CHECK(call({"decide", "x^3", "x^3", "--vars", "x,i"}).code == 2);
}

TEST_CASE("reports echo canonical inputs in a fixed field order") {
  const Run a = call({"decide", "y^3*3 + 2*x^3", "x^3+y^3", "--json"});
  const auto j = nlohmann::ordered_json::parse(a.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "result", "version"});
  CHECK(j["inputs"]["f"] == "2*x^3+3*y^3");
  CHECK(call({"decide", "x^3+y^3", "2*x^3+3*y^3", "--timing"}).out.find("timing_ms:") != std::string::npos);
}

TEST_CASE("files, certificates and matrices") {
  const auto f_file = scratch("f.txt");
  const auto cert_file = scratch("cert.txt");
  const auto u_file = scratch("u.txt");
  const auto singular_file = scratch("singular.txt");
  const auto witness_file = scratch("witness.txt");
  write(f_file, "x^2*y\n");
  write(u_file, "2\n1 0\n1 1\n");
  write(singular_file, "2\n1 1\n2 2\n");

  const Run a = call({"verify-iso", "@" + f_file.string(), "x^2*y+x^3", u_file.string(), "--certificate",
                      cert_file.string()});
  CHECK(a.code == 0);
  CHECK(a.out.find("result.iso: true\n") != std::string::npos);
  CHECK(read(cert_file).find("verdict: equivalent\n") != std::string::npos);
  CHECK(read(cert_file).find("substitution: 1,0;1,1\n") != std::string::npos);

  CHECK(call({"verify-iso", "x^2*y", "x^2*y+x^3", singular_file.string()}).code == 5);
  write(u_file, "2\n1 0\n0 1\n");
  CHECK(call({"verify-iso", "x^3+y^3", "x^3+y^3", u_file.string()}).code == 0);
  CHECK(call({"verify-iso", "x^3+y^3", "x^3+x^2*y", u_file.string()}).code == 4);
  CHECK(call({"verify-iso", "x^2+y^2", "x*y", u_file.string()}).out.find("route: low-degree") != std::string::npos);
  CHECK(call({"verify-iso", "x^2*y", "x^2*y+x^3", scratch("missing.txt").string()}).code == 3);

  const Run w = call({"witness", "x^3+y^3", "2*x^3+3*y^3", "--output", witness_file.string()});
  CHECK(w.code == 0);
  CHECK(call({"verify-witness", "x^3+y^3", "2*x^3+3*y^3", witness_file.string()}).code == 0);
  CHECK(call({"verify-witness", "x^3+y^3", "x^3+2*y^3", witness_file.string()}).code == 4);

  for (const auto& p : {f_file, cert_file, u_file, singular_file, witness_file}) std::filesystem::remove(p);
}

TEST_CASE("jac-equal and tangent-dim") {
  CHECK(call({"jac-equal", "x^2*y", "x^2*y+x^3"}).code == 0);
  CHECK(call({"jac-equal", "x^3+y^3", "x^3+x^2*y"}).code == 4);
  const Run t = call({"tangent-dim", "x^3+y^3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("result.tangent_dim: 4\n") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const Run h = call({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("decide") != std::string::npos);
}
