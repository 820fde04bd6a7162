#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "reslift/errors.hpp"
#include "reslift/session.hpp"

namespace {

int run(const std::string& path, const std::string& order_spec, const std::string& format,
        const std::string& out_path, bool check) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  reslift::Session session;
  try {
    reslift::MonomialOrder order = reslift::MonomialOrder::from_string(order_spec);
    session = reslift::parse_session(buffer.str(), order);
  } catch (const reslift::Error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  }

  reslift::SessionOptions options;
  options.check_exactness = check;
  reslift::SessionResult result;
  try {
    result = reslift::run_session(session, options);
  } catch (const reslift::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << (format == "json" ? reslift::emit_json(result) : reslift::emit_text(result));
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    out << reslift::emit_json(result);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial-complex session runner"};
  std::string path;
  std::string order = "grevlex";
  std::string format = "text";
  std::string out_path;
  bool check = false;
  app.add_option("session", path, "session script to execute")->required();
  app.add_option("--order", order, "monomial order: lex, grevlex, or wgrevlex:w1,w2,...");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the structured JSON document to this path");
  app.add_flag("--check", check, "verify exactness of every lift target");
  CLI11_PARSE(app, argc, argv);
  return run(path, order, format, out_path, check);
}
