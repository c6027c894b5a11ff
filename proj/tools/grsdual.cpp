#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grsdual/constructions.hpp"
#include "grsdual/mobius.hpp"
#include "grsdual/serialize.hpp"

namespace {

using namespace grsdual;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::InternalVerificationFailed:
    case Errc::NotSelfDual:
    case Errc::InconsistentWord:
      return 1;
    case Errc::MalformedDescriptor:
    case Errc::IoFailure:
      return 3;
    default:
      return 2;
  }
}

uint64_t field_bound() {
  if (const char* env = std::getenv("GRSDUAL_MAX_FIELD")) {
    char* end = nullptr;
    uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 3) return v;
    raise(Errc::InvalidParams, "GRSDUAL_MAX_FIELD must be an integer >= 3");
  }
  return kDefaultMaxField;
}

struct FieldArgs {
  uint64_t q = 0;
  uint64_t p = 0;
  uint64_t m = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "field size p^m");
    cmd->add_option("--p", p, "field characteristic");
    cmd->add_option("--m", m, "extension degree");
  }
  FieldPtr build() const {
    bool by_q = q != 0, by_pm = p != 0 || m != 0;
    if (by_q == by_pm)
      raise(Errc::InvalidParams, "give either --q or both --p and --m");
    if (by_q) return build_field_q(q, field_bound());
    if (p == 0 || m == 0) raise(Errc::InvalidParams, "--p and --m must both be set");
    return build_field(static_cast<uint32_t>(p), static_cast<uint32_t>(m), field_bound());
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

std::vector<uint32_t> parse_coeff_token(const std::string& tok) {
  std::vector<uint32_t> c;
  size_t pos = 0;
  while (pos <= tok.size()) {
    size_t next = tok.find(':', pos);
    std::string part = tok.substr(pos, next == std::string::npos ? next : next - pos);
    if (part.empty()) raise(Errc::InvalidParams, "empty coefficient in '" + tok + "'");
    char* end = nullptr;
    unsigned long v = std::strtoul(part.c_str(), &end, 10);
    if (!end || *end != '\0')
      raise(Errc::InvalidParams, "bad coefficient '" + part + "'");
    c.push_back(static_cast<uint32_t>(v));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return c;
}

FieldElement parse_dlog_token(const std::string& tok, const FieldContext& F) {
  if (tok == "0") return F.zero();
  if (tok == "1") return F.one();
  if (tok.size() > 2 && tok[0] == 'w' && tok[1] == '^') {
    char* end = nullptr;
    unsigned long long e = std::strtoull(tok.c_str() + 2, &end, 10);
    if (end && *end == '\0') return {&F, F.exp_log(e)};
  }
  raise(Errc::InvalidParams, "bad power-form element '" + tok + "' (use 0, 1 or w^j)");
}

MobiusTransform parse_transform(const std::vector<std::string>& g_parts,
                                const std::string& g_dlog, const FieldContext& F) {
  std::vector<FieldElement> abcd;
  if (!g_parts.empty() && !g_dlog.empty())
    raise(Errc::InvalidParams, "give only one of --g and --g-dlog");
  if (!g_parts.empty()) {
    if (g_parts.size() != 4)
      raise(Errc::InvalidParams, "--g needs four comma-separated coefficient lists");
    for (const auto& tok : g_parts) abcd.push_back(F.from_coeffs(parse_coeff_token(tok)));
  } else if (!g_dlog.empty()) {
    std::vector<std::string> toks;
    size_t pos = 0;
    while (pos <= g_dlog.size()) {
      size_t next = g_dlog.find(',', pos);
      toks.push_back(g_dlog.substr(pos, next == std::string::npos ? next : next - pos));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (toks.size() != 4)
      raise(Errc::InvalidParams, "--g-dlog needs four comma-separated entries");
    for (const auto& tok : toks) abcd.push_back(parse_dlog_token(tok, F));
  } else {
    raise(Errc::InvalidParams, "a transform is required: --g or --g-dlog");
  }
  return {abcd[0], abcd[1], abcd[2], abcd[3]};
}

std::vector<FieldElement> parse_message(const std::string& spec, const FieldContext& F,
                                        size_t k) {
  Json j;
  if (!spec.empty() && spec[0] == '@') {
    j = read_json_file(spec.substr(1));
  } else {
    j = Json::parse(spec, nullptr, false);
    if (j.is_discarded()) raise(Errc::MalformedDescriptor, "--msg is not valid JSON");
  }
  if (j.is_object() && j.contains("message")) j = j["message"];
  if (!j.is_array() || j.size() != k)
    raise(Errc::MalformedDescriptor, "message must be an array of k elements");
  std::vector<FieldElement> msg;
  for (const auto& e : j) msg.push_back(element_from_json(e, F));
  return msg;
}

MdsOptions mds_options(const std::string& mode, uint64_t samples, uint64_t seed) {
  MdsOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  if (mode == "auto")
    opts.mode = MdsMode::Auto;
  else if (mode == "exhaustive")
    opts.mode = MdsMode::Exhaustive;
  else if (mode == "bruteforce")
    opts.mode = MdsMode::Bruteforce;
  else if (mode == "sampled")
    opts.mode = MdsMode::Sampled;
  else
    opts.mode = MdsMode::Skip;
  return opts;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-dual MDS codes from generalized Reed-Solomon constructions"};
  app.require_subcommand(1);

  FieldArgs field_args;
  std::string in_path, out_path, cert_path, word_path;
  std::string case_tag, mds_mode = "auto", g_dlog, msg_spec;
  std::vector<std::string> g_parts;
  uint64_t nprime = 0, t = 0, max_n = 0, seed = 0, samples = 10'000;
  int theorem = 0;
  bool no_matrix = false;

  CLI::App* cmd_field = app.add_subcommand("field", "build a field and print its descriptor");
  field_args.attach(cmd_field);
  cmd_field->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_construct = app.add_subcommand("construct", "build a self-dual code");
  field_args.attach(cmd_construct);
  cmd_construct->add_option("--theorem", theorem, "construction family (1 or 2)")->required();
  cmd_construct->add_option("--case", case_tag, "case tag: i, ii or iii")->required();
  cmd_construct->add_option("--nprime", nprime, "coset subgroup order, divides q-1")->required();
  cmd_construct->add_option("--t", t, "number of cosets")->required();
  cmd_construct->add_option("--out", out_path, "output path (default stdout)");
  cmd_construct->add_flag("--no-matrix", no_matrix, "omit the generator matrix");

  CLI::App* cmd_verify = app.add_subcommand("verify", "check self-duality and MDS");
  std::string verify_positional;
  cmd_verify->add_option("descriptor", verify_positional, "code descriptor (same as --in)");
  cmd_verify->add_option("--in", in_path, "code descriptor");
  cmd_verify->add_option("--mds", mds_mode, "MDS check mode")
      ->check(CLI::IsMember({"auto", "exhaustive", "bruteforce", "sampled", "skip"}));
  cmd_verify->add_option("--seed", seed, "sampling seed");
  cmd_verify->add_option("--samples", samples, "sampled-minor count");
  cmd_verify->add_option("--out", out_path, "also write the report here");

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "reachable lengths with witnesses");
  field_args.attach(cmd_enum);
  cmd_enum->add_option("--max-n", max_n, "largest length to report")->required();
  cmd_enum->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_mobius = app.add_subcommand("mobius", "transport a code along a transform");
  cmd_mobius->add_option("--in", in_path, "code descriptor")->required();
  cmd_mobius->add_option("--g", g_parts, "a,b,c,d coefficient lists (colon-separated digits)")
      ->delimiter(',');
  cmd_mobius->add_option("--g-dlog", g_dlog, "a,b,c,d in power form, e.g. w^3,0,1,w^1");
  cmd_mobius->add_option("--out", out_path, "transported descriptor path")->required();
  cmd_mobius->add_option("--cert", cert_path, "certificate path (default <out>.cert.json)");
  cmd_mobius->add_flag("--no-matrix", no_matrix, "omit the generator matrix");

  CLI::App* cmd_rminf = app.add_subcommand("remove-infinity", "move a code off infinity");
  cmd_rminf->add_option("--in", in_path, "code descriptor")->required();
  cmd_rminf->add_option("--out", out_path, "transported descriptor path")->required();
  cmd_rminf->add_option("--cert", cert_path, "certificate path (default <out>.cert.json)");
  cmd_rminf->add_flag("--no-matrix", no_matrix, "omit the generator matrix");

  CLI::App* cmd_encode = app.add_subcommand("encode", "encode a message");
  cmd_encode->add_option("--in", in_path, "code descriptor")->required();
  cmd_encode->add_option("--msg", msg_spec, "message JSON (inline or @file)")->required();
  cmd_encode->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_decode = app.add_subcommand("decode", "fill erasures in a received word");
  cmd_decode->add_option("--in", in_path, "code descriptor")->required();
  cmd_decode->add_option("--word", word_path, "word JSON with null erasures")->required();
  cmd_decode->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_field->parsed()) {
      emit(dump(field_to_json(*field_args.build())), out_path);
      return 0;
    }

    if (cmd_construct->parsed()) {
      FieldPtr F = field_args.build();
      GrsCode code = coset_code(F, make_params(F->q(), theorem, case_tag, nprime, t));
      emit(dump(code_to_json(code, !no_matrix)), out_path);
      return 0;
    }

    if (cmd_verify->parsed()) {
      if (in_path.empty()) in_path = verify_positional;
      if (in_path.empty()) raise(Errc::InvalidParams, "verify needs a descriptor path");
      GrsCode code = code_from_json(read_json_file(in_path), field_bound());
      Json report = verification_report_json(code, mds_options(mds_mode, samples, seed));
      std::cout << dump(report);
      if (!out_path.empty()) write_text_file(out_path, dump(report));
      return report["pass"].get<bool>() ? 0 : 1;
    }

    if (cmd_enum->parsed()) {
      FieldPtr F = field_args.build();
      std::string lines;
      for (const auto& w : enumerate_lengths(F->q(), max_n))
        lines += length_witness_to_json(w).dump() + "\n";
      emit(lines, out_path);
      return 0;
    }

    if (cmd_mobius->parsed() || cmd_rminf->parsed()) {
      GrsCode code = code_from_json(read_json_file(in_path), field_bound());
      TransportCertificate cert =
          cmd_mobius->parsed()
              ? transport(code, parse_transform(g_parts, g_dlog, *code.field()))
              : remove_infinity(code);
      write_text_file(out_path, dump(code_to_json(cert.transported, !no_matrix)));
      std::string cpath = cert_path.empty() ? out_path + ".cert.json" : cert_path;
      write_text_file(cpath, dump(certificate_to_json(cert)));
      return 0;
    }

    if (cmd_encode->parsed()) {
      GrsCode code = code_from_json(read_json_file(in_path), field_bound());
      auto word = encode(code, parse_message(msg_spec, *code.field(), code.k()));
      Json j;
      Json arr = Json::array();
      for (const auto& x : word) arr.push_back(element_to_json(x));
      j["codeword"] = arr;
      emit(dump(j), out_path);
      return 0;
    }

    if (cmd_decode->parsed()) {
      GrsCode code = code_from_json(read_json_file(in_path), field_bound());
      Json jw = read_json_file(word_path);
      if (jw.is_object() && jw.contains("codeword")) jw = jw["codeword"];
      if (!jw.is_array() || jw.size() != code.n())
        raise(Errc::MalformedDescriptor, "word must be an array of n entries");
      std::vector<std::optional<FieldElement>> word;
      for (const auto& e : jw) {
        if (e.is_null())
          word.push_back(std::nullopt);
        else
          word.push_back(element_from_json(e, *code.field()));
      }
      auto msg = erasure_decode(code, word);
      auto full = encode(code, msg);
      Json j;
      Json arr = Json::array();
      for (const auto& x : msg) arr.push_back(element_to_json(x));
      j["message"] = arr;
      Json cw = Json::array();
      for (const auto& x : full) cw.push_back(element_to_json(x));
      j["codeword"] = cw;
      emit(dump(j), out_path);
      return 0;
    }
  } catch (const grsdual::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
