#include "sopq_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "sopq/certify.hpp"
#include "sopq/error.hpp"
#include "sopq/json_io.hpp"

namespace sopq::cli {

namespace {

using sopq::json::Json;
using sopq::json::encode;

// What a handler produces: a JSON payload (or raw text for explain) plus an
// exit code.
struct Outcome {
  Json payload;
  int code = kOk;
  std::string text;  // used instead of payload when non-empty
};

Json result_object(Json value) {
  Json j;
  j["result"] = std::move(value);
  return j;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& h : parse_vec(text)) {
    if (!h.is_integer()) throw InputError("expected integers, got " + h.to_string());
    out.push_back(static_cast<int>(h.to_integer()));
  }
  return out;
}

std::pair<int, int> parse_signature_pair(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2) throw InputError("signature must be written p,q");
  return {v[0], v[1]};
}

WeylType parse_weyl_type(const std::string& t) {
  if (t == "B" || t == "b") return WeylType::B;
  if (t == "D" || t == "d") return WeylType::D;
  throw InputError("Weyl type must be B or D");
}

ConstituentId parse_constituent(const std::string& text) {
  if (text == "+" || text == "large+") return ConstituentId::large_plus();
  if (text == "-" || text == "large-") return ConstituentId::large_minus();
  const auto v = parse_int_list(text);
  if (v.size() != 1) throw InputError("constituent must be an index, + or -");
  return ConstituentId::small(v[0]);
}

std::string read_source(const std::string& path, const std::string& stdin_data) {
  if (path == "-") return stdin_data;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json error_object(const std::string& kind, const std::string& message) {
  Json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j;
}

// Shapes for the --shape flag of pad-ktype.
SOpqKType::Shape parse_shape(const std::string& s) {
  if (s == "extended") return SOpqKType::Shape::Extended;
  if (s == "fused") return SOpqKType::Shape::Fused;
  throw InputError("shape must be extended or fused");
}

// Deterministic file name for one batch certificate.
std::string batch_file_name(const ArthurInput& in) {
  std::string name = "p" + std::to_string(in.sig.p()) + "_q" + std::to_string(in.sig.q()) + "_k" +
                     std::to_string(in.k) + "_" + (in.diagram.flavor() == Flavor::Orthogonal ? "orth" : "symp");
  if (in.diagram.parts().empty()) name += "_empty";
  for (int part : in.diagram.parts()) name += "_" + std::to_string(part);
  return name + ".json";
}

struct BatchOptions {
  int max_size = 0;
  std::string sig;
  std::string out_dir;
  int jobs = 1;
};

Outcome run_batch(const BatchOptions& opt, std::string& stdout_text) {
  auto [p, q] = parse_signature_pair(opt.sig);
  if (opt.max_size < 0) throw InputError("--max-size must be nonnegative");
  if (opt.jobs < 1) throw InputError("--jobs must be at least 1");
  const Signature sig(p, q);
  const Flavor flavor = (sig.p() + sig.q()) % 2 == 0 ? Flavor::Orthogonal : Flavor::Symplectic;

  // Enumeration order is the output order.
  std::vector<ArthurInput> inputs;
  for (int k = 0; k <= sig.p() && 2 * k <= opt.max_size; ++k) {
    const SOpqKType trivial = make_sopq_ktype(SOpqKType::Shape::Extended, SOWeight::zero(sig.p() - k),
                                              SOWeight::zero(sig.q() - k), Sign::Plus);
    for (auto& d : enumerate_diagrams(2 * k, flavor))
      inputs.push_back(make_arthur_input(sig.p(), sig.q(), k, d, trivial, true));
  }

  std::vector<std::string> lines(inputs.size());
  std::vector<char> certified(inputs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      const Certificate cert = certify(inputs[i]);
      lines[i] = encode(cert).dump();
      certified[i] = cert.verdict.certified() ? 1 : 0;
    }
  };
  const int threads = std::min<int>(opt.jobs, std::max<std::size_t>(1, inputs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (!opt.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) throw InputError("cannot create " + opt.out_dir + ": " + ec.message());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      std::ofstream f(std::filesystem::path(opt.out_dir) / batch_file_name(inputs[i]), std::ios::binary);
      if (!f) throw InputError("cannot write into " + opt.out_dir);
      f << lines[i] << '\n';
    }
  }
  for (const auto& line : lines) stdout_text += line + '\n';
  const bool all = std::all_of(certified.begin(), certified.end(), [](char c) { return c != 0; });
  return {Json(), all ? kOk : kNotCertified, {}};
}

}  // namespace

RunResult run(const std::vector<std::string>& argv, const std::string& stdin_data) {
  CLI::App app{"Exact weight, K-type and unitarity-certificate calculus for SO(p,q)", "sopq"};
  // --h is a vector option (chamber, fn-eval), so help gets no short alias.
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);
  bool meta = false;
  app.add_flag("--meta", meta, "Wrap the JSON result in an envelope with the tool version");

  // Option storage shared by the subcommands.
  std::string v, mu, lambda, h, xi, eta_s, xi1, xi2, parts, flavor = "orthogonal", type, s, e, bound_v, input, cert;
  std::string constituent, shape = "extended", sign = "+";
  int p = 0, q = 0, m = 0, d = 0, n = 0;
  std::string m_half;
  bool strict = false, non_strict = false, list = false, inf_char = false;
  BatchOptions batch;

  std::map<CLI::App*, std::function<Outcome()>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<Outcome()> fn) {
    CLI::App* c = app.add_subcommand(name, help);
    handlers[c] = std::move(fn);
    return c;
  };
  auto vec_opt = [](CLI::App* c, const char* flag, std::string& target, const char* help, bool required = true) {
    auto* o = c->add_option(flag, target, help)->allow_extra_args(false);
    if (required) o->required();
    return o;
  };

  auto* c_rearrange = sub("rearrange", "Sort a vector into nonincreasing order",
                          [&] { return Outcome{result_object(encode(rearrange_desc(parse_vec(v))))}; });
  vec_opt(c_rearrange, "--v", v, "Comma-separated half-integers");

  auto* c_abs = sub("abs", "Entrywise absolute value",
                    [&] { return Outcome{result_object(encode(abs_vec(parse_vec(v))))}; });
  vec_opt(c_abs, "--v", v, "Comma-separated half-integers");

  auto* c_dom = sub("dominate", "Prefix-sum dominance test, weak unless --strict", [&] {
    const auto a = parse_vec(mu), b = parse_vec(lambda);
    return Outcome{result_object(strict ? strictly_dominated(a, b) : weakly_dominated(a, b))};
  });
  vec_opt(c_dom, "--mu", mu, "Smaller vector");
  vec_opt(c_dom, "--lambda", lambda, "Larger vector");
  c_dom->add_flag("--strict", strict, "Strict dominance (default is weak)");

  auto* c_weyl = sub("weyl-canonical", "Weyl-group canonical form of type B or D", [&] {
    return Outcome{encode(weyl_canonical(parse_vec(v), parse_weyl_type(type)))};
  });
  vec_opt(c_weyl, "--v", v, "Comma-separated half-integers");
  c_weyl->add_option("--type", type, "B or D")->required();

  auto add_pq = [&](CLI::App* c) {
    c->add_option("--p", p, "p")->required();
    c->add_option("--q", q, "q")->required();
  };

  auto* c_roots = sub("roots", "Restricted roots of SO(p,q) with multiplicities", [&] {
    Json roots = Json::array();
    for (const auto& r : restricted_roots(Signature(p, q))) roots.push_back(encode(r));
    Json j;
    j["roots"] = std::move(roots);
    return Outcome{j};
  });
  add_pq(c_roots);

  auto* c_rho = sub("rho", "Half-sum of positive restricted roots",
                    [&] { return Outcome{result_object(encode(rho(Signature(p, q))))}; });
  add_pq(c_rho);

  auto* c_chamber = sub("chamber", "Open positive Weyl chamber membership", [&] {
    return Outcome{result_object(in_open_chamber(parse_vec(h), Signature(p, q)))};
  });
  vec_opt(c_chamber, "--h", h, "Vector H");
  add_pq(c_chamber);

  auto* c_gl = sub("gl-shift", "rho-shifted GL(d) character string", [&] {
    return Outcome{result_object(encode(gl_rho_shift(HalfInt::parse(m_half), p, q, d)))};
  });
  c_gl->add_option("--m", m_half, "Half-integer m")->required();
  add_pq(c_gl);
  c_gl->add_option("--d", d, "d")->required();

  auto* c_sow = sub("so-weight", "Validate an SO(p) highest weight",
                    [&] { return Outcome{encode(validate_so_weight(p, parse_vec(xi)))}; });
  c_sow->add_option("--p", p, "p")->required();
  vec_opt(c_sow, "--xi", xi, "Weight entries");

  auto* c_oext = sub("o-extensions", "Irreducible O(p)-types containing an SO(p)-type", [&] {
    Json types = Json::array();
    for (const auto& t : o_extensions(validate_so_weight(p, parse_vec(xi)))) types.push_back(encode(t));
    Json j;
    j["types"] = std::move(types);
    return Outcome{j};
  });
  c_oext->add_option("--p", p, "p")->required();
  vec_opt(c_oext, "--xi", xi, "Weight entries");

  auto* c_sopq = sub("sopq-type", "S(O(p)O(q))-types containing an SO(p)xSO(q)-type", [&] {
    Json types = Json::array();
    for (const auto& t : sopq_type(validate_so_weight(p, parse_vec(xi)), validate_so_weight(q, parse_vec(eta_s))))
      types.push_back(encode(t));
    Json j;
    j["types"] = std::move(types);
    return Outcome{j};
  });
  add_pq(c_sopq);
  vec_opt(c_sopq, "--xi", xi, "SO(p) weight");
  vec_opt(c_sopq, "--eta", eta_s, "SO(q) weight");

  auto* c_pad = sub("pad-ktype", "Zero-pad a K-type from (p,q) to (p+d,q+d)", [&] {
    const auto t = make_sopq_ktype(parse_shape(shape), validate_so_weight(p, parse_vec(xi)),
                                   validate_so_weight(q, parse_vec(eta_s)), sopq::json::sign_from_string(sign));
    return Outcome{encode(pad_ktype(t, d))};
  });
  add_pq(c_pad);
  vec_opt(c_pad, "--xi", xi, "SO(p) weight");
  vec_opt(c_pad, "--eta", eta_s, "SO(q) weight");
  c_pad->add_option("--shape", shape, "extended or fused");
  c_pad->add_option("--sign", sign, "+ or -");
  c_pad->add_option("--d", d, "Padding amount")->required();

  auto* c_dps = sub("dps", "Degenerate principal series I_n(s) of SO(n,n)", [&]() -> Outcome {
    int nn = n;
    HalfInt ss;
    std::optional<ConstituentId> cid;
    std::optional<HalfIntVec> lam;
    if (!input.empty()) {
      const Json j = sopq::json::parse(read_source(input, stdin_data));
      if (!j.is_object() || !j.contains("n") || !j.contains("s")) throw InputError("dps input needs \"n\" and \"s\"");
      for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "n" && it.key() != "s" && it.key() != "constituent" && it.key() != "lambda")
          throw InputError("dps input: unexpected key \"" + it.key() + "\"");
      if (!j.at("n").is_number_integer()) throw InputError("\"n\" must be an integer");
      nn = j.at("n").get<int>();
      ss = sopq::json::halfint_from_json(j.at("s"));
      if (j.contains("constituent")) cid = sopq::json::constituent_from_json(j.at("constituent"));
      if (j.contains("lambda")) lam = sopq::json::vec_from_json(j.at("lambda"));
    } else {
      if (s.empty()) throw InputError("dps needs --s or --input");
      ss = HalfInt::parse(s);
      if (!constituent.empty()) cid = parse_constituent(constituent);
      if (!lambda.empty()) lam = parse_vec(lambda);
    }
    const DPSPoint pt = make_dps_point(nn, ss);
    if (inf_char) return Outcome{result_object(encode(infinitesimal_char_In(pt)))};
    Json j;
    j["n"] = pt.n;
    j["s"] = encode(pt.s);
    if (list || !cid) {
      Json rows = Json::array();
      for (const auto& c : existing_constituents(pt)) {
        Json row;
        row["constituent"] = encode(c);
        row["unitary"] = constituent_is_unitary(pt, c);
        rows.push_back(std::move(row));
      }
      j["constituents"] = std::move(rows);
      return Outcome{j};
    }
    j["constituent"] = encode(*cid);
    const bool exists = constituent_exists(pt, *cid);
    j["exists"] = exists;
    if (exists) j["unitary"] = constituent_is_unitary(pt, *cid);
    if (lam) {
      if (!exists) throw InputError("constituent does not exist at this point");
      j["lambda"] = encode(*lam);
      j["contains"] = ktype_in_constituent(pt, *cid, validate_so_weight(pt.n, *lam));
    }
    return Outcome{j};
  });
  c_dps->add_option("--n", n, "n");
  c_dps->add_option("--s", s, "Continuous parameter s");
  c_dps->add_flag("--list-constituents", list, "List existing constituents with unitarity flags");
  c_dps->add_option("--constituent", constituent, "Constituent: index i, + or -");
  c_dps->add_option("--lambda", lambda, "SO(n) weight to test for membership");
  c_dps->add_flag("--inf-char", inf_char, "Print the infinitesimal character");
  c_dps->add_option("--input", input, "JSON query file, or - for stdin");

  auto* c_eta = sub("eta", "Infinitesimal character string eta(n-m-1, m)",
                    [&] { return Outcome{result_object(encode(eta(n, m)))}; });
  c_eta->add_option("--n", n, "n")->required();
  c_eta->add_option("--m", m, "m")->required();

  auto* c_vm = sub("vm-decay", "Decay exponent of the small constituent V_m",
                   [&] { return Outcome{result_object(encode(vm_decay_exponent(n, m)))}; });
  c_vm->add_option("--n", n, "n")->required();
  c_vm->add_option("--m", m, "m")->required();

  std::vector<double> hvals;
  auto* c_fn = sub("fn-eval", "Diagnostic floating-point evaluation of F_N(H)", [&] {
    return Outcome{result_object(fN_eval(hvals))};
  });
  c_fn->add_option("--h", hvals, "Real vector H")->delimiter(',')->required();

  auto diagram_from_flags = [&] {
    return validate_diagram(parse_int_list(parts), sopq::json::flavor_from_string(flavor));
  };
  auto add_diagram = [&](CLI::App* c) {
    vec_opt(c, "--parts", parts, "Ascending parts, comma-separated");
    c->add_option("--flavor", flavor, "orthogonal or symplectic");
  };

  auto* c_vdiag = sub("validate-diagram", "Validate an orthogonal or symplectic Young diagram",
                      [&] { return Outcome{encode(diagram_from_flags())}; });
  add_diagram(c_vdiag);

  auto* c_ve = sub("very-even", "Very-even test for orthogonal diagrams",
                   [&] { return Outcome{result_object(is_very_even(diagram_from_flags()))}; });
  add_diagram(c_ve);

  auto* c_vd = sub("vd", "Weighted Dynkin datum v_D of a Young diagram",
                   [&] { return Outcome{encode(v_D(diagram_from_flags()))}; });
  add_diagram(c_vd);

  auto* c_hs = sub("h-spectrum", "Eigenvalues of the sl2 semisimple element",
                   [&] { return Outcome{result_object(encode(h_spectrum_oracle(diagram_from_flags())))}; });
  add_diagram(c_hs);

  auto* c_nv = sub("nonvanishing", "Stable-range nonvanishing predicate 2m+1 >= p+q",
                   [&] { return Outcome{result_object(nonvanishing_stable(p, q, m))}; });
  add_pq(c_nv);
  c_nv->add_option("--m", m, "m")->required();

  auto* c_deg = sub("degree", "Degree of a pair of weights", [&] {
    return Outcome{result_object(degree(parse_vec(xi1), parse_vec(xi2)))};
  });
  vec_opt(c_deg, "--xi1", xi1, "First magnitudes");
  vec_opt(c_deg, "--xi2", xi2, "Second magnitudes");

  auto* c_t0 = sub("theta0", "Lowest-degree theta correspondence to Sp(2m)", [&] {
    return Outcome{encode(theta0_forward(q, p, m, validate_so_weight(q, parse_vec(xi2)), validate_so_weight(p, parse_vec(xi1))))};
  });
  add_pq(c_t0);
  c_t0->add_option("--m", m, "m")->required();
  vec_opt(c_t0, "--xi2", xi2, "SO(q) weight");
  vec_opt(c_t0, "--xi1", xi1, "SO(p) weight");

  auto* c_t0b = sub("theta0-back", "Forward then inverse theta to the padded group", [&] {
    return Outcome{encode(
        theta0_back(m, q, p, d, validate_so_weight(q, parse_vec(xi2)), validate_so_weight(p, parse_vec(xi1))))};
  });
  add_pq(c_t0b);
  c_t0b->add_option("--m", m, "m")->required();
  c_t0b->add_option("--d", d, "d")->required();
  vec_opt(c_t0b, "--xi2", xi2, "SO(q) weight");
  vec_opt(c_t0b, "--xi1", xi1, "SO(p) weight");

  auto* c_ta = sub("growth-bound", "Growth bound for the stable theta lift",
                   [&] { return Outcome{encode(theoremA_bound(p, q, m))}; });
  add_pq(c_ta);
  c_ta->add_option("--m", m, "m")->required();

  auto* c_decay = sub("decay", "Decay exponent of a Langlands parameter",
                      [&] { return Outcome{result_object(encode(decay_exponent(parse_vec(v), Signature(p, q))))}; });
  vec_opt(c_decay, "--v", v, "Continuous parameter");
  add_pq(c_decay);

  auto* c_sat = sub("satisfies", "Test an exponent against a bound (strict by default)", [&] {
    return Outcome{result_object(satisfies_bound(parse_vec(e), ExponentBound{parse_vec(bound_v), !non_strict}))};
  });
  vec_opt(c_sat, "--e", e, "Exponent");
  vec_opt(c_sat, "--bound", bound_v, "Bound vector");
  c_sat->add_flag("--non-strict", non_strict, "Allow equality");

  auto* c_t5 = sub("tensor-growth", "Growth condition for invariant tensor products", [&] {
    return Outcome{result_object(theorem5_condition(parse_vec(eta_s), parse_vec(mu), p, q, d))};
  });
  vec_opt(c_t5, "--eta", eta_s, "eta vector");
  vec_opt(c_t5, "--mu", mu, "mu vector");
  add_pq(c_t5);
  c_t5->add_option("--d", d, "d")->required();

  auto* c_temp = sub("tempered", "Tempered leading-exponent criterion",
                     [&] { return Outcome{result_object(tempered_leading_ok(parse_vec(v), Signature(p, q)))}; });
  vec_opt(c_temp, "--v", v, "Exponent");
  add_pq(c_temp);

  auto* c_cert = sub("certify", "Certify unitarity of an Arthur-type parameter", [&] {
    const ArthurInput in = sopq::json::arthur_input_from_json(sopq::json::parse(read_source(input, stdin_data)));
    const Certificate c = certify(in);
    return Outcome{encode(c), c.verdict.certified() ? kOk : kNotCertified};
  });
  c_cert->add_option("--input", input, "Input JSON file, or - for stdin")->required();

  auto load_cert = [&] {
    return sopq::json::certificate_from_json(sopq::json::parse(read_source(cert, stdin_data)));
  };

  auto* c_verify = sub("verify", "Replay a certificate independently", [&] {
    Json j;
    VerifyReport r;
    try {
      r = verify(load_cert());
    } catch (const InputError& err) {
      // A certificate that does not even decode is a failed verification.
      r = {false, std::string("decode: ") + err.what()};
    }
    j["verified"] = r.ok;
    if (!r.ok) j["mismatch"] = r.mismatch;
    return Outcome{j, r.ok ? kOk : kNotCertified};
  });
  c_verify->add_option("--cert", cert, "Certificate JSON file, or - for stdin")->required();

  auto* c_explain = sub("explain", "Human-readable account of a certificate", [&] {
    Outcome o;
    o.text = explain(load_cert());
    if (o.text.empty() || o.text.back() != '\n') o.text += '\n';
    return o;
  });
  c_explain->add_option("--cert", cert, "Certificate JSON file, or - for stdin")->required();

  std::string batch_out;
  auto* c_batch = sub("batch-certify", "Certify every diagram up to a size for one signature",
                      [&] { return run_batch(batch, batch_out); });
  c_batch->add_option("--max-size", batch.max_size, "Largest diagram size 2k")->required();
  c_batch->add_option("--sig", batch.sig, "Signature p,q")->required();
  c_batch->add_option("--out", batch.out_dir, "Directory receiving one file per certificate");
  c_batch->add_option("--jobs", batch.jobs, "Worker threads");

  RunResult res;
  std::vector<std::string> rev(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& err) {
    res.exit_code = kInvalidInput;
    res.err = error_object("usage", err.what()).dump() + "\n";
    return res;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->get_help_ptr() && chosen->get_help_ptr()->count() > 0) {
    res.out = chosen->help();
    return res;
  }

  try {
    Outcome o = handlers.at(chosen)();
    res.exit_code = o.code;
    if (chosen == c_batch) {
      res.out = batch_out;
    } else if (!o.text.empty()) {
      res.out = o.text;
    } else if (meta) {
      Json env;
      env["tool"] = "sopq";
      env["version"] = SOPQ_VERSION;
      env["command"] = chosen->get_name();
      env["result"] = std::move(o.payload);
      res.out = env.dump() + "\n";
    } else {
      res.out = o.payload.dump() + "\n";
    }
  } catch (const InputError& err) {
    res.exit_code = kInvalidInput;
    res.out.clear();
    res.err = error_object("invalidInput", err.what()).dump() + "\n";
  } catch (const std::exception& err) {
    res.exit_code = kInvalidInput;
    res.out.clear();
    res.err = error_object("internal", err.what()).dump() + "\n";
  }
  return res;
}

}  // namespace sopq::cli
