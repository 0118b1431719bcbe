// lattice: inspect named or user-supplied lattices.
//   lattice info     --name X | --gram file.json
//   lattice shortest --name X | --gram file.json --bound B [--kissing] [--threads N]
//   lattice disc     --name X | --gram file.json

#include "oglat/discriminant.hpp"
#include "oglat/enumerate.hpp"
#include "oglat/golay.hpp"
#include "oglat/json_io.hpp"
#include "oglat/og10.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>

namespace {

oglat::Lattice resolve(const std::string& name, const std::string& gram_file) {
  if (!name.empty() && !gram_file.empty())
    throw std::invalid_argument("give either --name or --gram, not both");
  if (!name.empty()) return oglat::lattice_by_name(name);
  if (!gram_file.empty()) return oglat::load_lattice_file(gram_file);
  throw std::invalid_argument("one of --name or --gram is required");
}

void print_info(const oglat::Lattice& a) {
  using namespace oglat;
  Signature sig = signature(a.gram());
  std::cout << "label:      " << (a.label() ? *a.label() : "(none)") << "\n";
  std::cout << "rank:       " << a.rank() << "\n";
  std::cout << "signature:  (" << sig.pos << "," << sig.neg << ")\n";
  std::cout << "|det|:      " << a.abs_det().str() << "\n";
  std::cout << "even:       " << (is_even(a) ? "yes" : "no") << "\n";
  bool definite = sig.pos == 0 || sig.neg == 0;
  if (definite && a.rank() > 0) {
    std::cout << "min |norm|: " << minimal_norm(a).str() << "\n";
    std::cout << "roots:      " << count_roots(a) << "\n";
  } else {
    std::cout << "min |norm|: n/a (indefinite)\n";
    std::cout << "roots:      n/a (indefinite)\n";
  }
}

void print_golay_info() {
  const oglat::GolayCode& c = oglat::make_golay();
  std::cout << "binary Golay code [24,12,8]\n";
  std::cout << "codewords:  " << c.codewords().size() << "\n";
  std::cout << "weights:   ";
  for (auto& [w, n] : c.weight_distribution()) std::cout << " " << w << ":" << n;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integral lattice inspector"};
  app.require_subcommand(1);

  std::string name, gram_file;
  long long bound = 2;
  bool kissing = false;
  unsigned threads = 1;

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--name", name,
                    "named lattice: u, a2, e8, og10, leech, lambda125 (info also: golay)");
    cmd->add_option("--gram", gram_file, "lattice JSON file {label?, gram}");
  };

  CLI::App* info = app.add_subcommand("info", "rank, signature, |det|, evenness, short vectors");
  add_source(info);

  CLI::App* shortest = app.add_subcommand("shortest", "complete short-vector counts");
  add_source(shortest);
  shortest->add_option("--bound", bound, "even |norm| bound")->required();
  shortest->add_flag("--kissing", kissing, "also report minimal norm and kissing number");
  shortest->add_option("--threads", threads, "enumeration workers")->check(CLI::PositiveNumber);

  CLI::App* disc = app.add_subcommand("disc", "discriminant group and finite quadratic form");
  add_source(disc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) {
      if (name == "golay")
        print_golay_info();
      else
        print_info(resolve(name, gram_file));
      return 0;
    }
    if (shortest->parsed()) {
      oglat::Lattice a = resolve(name, gram_file);
      oglat::ShortVectorReport rep = oglat::short_vectors(a, oglat::Int(bound), threads);
      nlohmann::ordered_json j;
      j["bound"] = rep.bound.str();
      nlohmann::ordered_json counts;
      for (auto& [n, c] : rep.counts_by_norm) counts[n.str()] = c;
      j["counts_by_norm"] = std::move(counts);
      j["total_pairs"] = rep.total_pairs();
      if (kissing) {
        oglat::Int mu = oglat::minimal_norm(a);
        j["minimal_norm"] = mu.str();
        j["kissing_number"] = oglat::kissing_number(a, threads);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (disc->parsed()) {
      oglat::Lattice a = resolve(name, gram_file);
      oglat::DiscriminantGroup d = oglat::discriminant_group(a);
      std::cout << "|L#|:     " << d.order().str() << "\n";
      std::cout << "factors: ";
      for (auto& f : d.invariant_factors()) std::cout << " " << f.str();
      std::cout << "\nlength:   " << d.length() << "\n";
      std::cout << "2-length: " << d.p_length(2) << "\n";
      std::cout << "3-length: " << d.p_length(3) << "\n";
      if (oglat::is_even(a)) {
        for (std::size_t i = 0; i < d.length(); ++i) {
          std::vector<oglat::Int> e(d.length(), oglat::Int(0));
          e[i] = 1;
          std::cout << "q(g" << i + 1 << "):    " << oglat::rat_to_string(disc_quadratic(d, e))
                    << " mod 2Z\n";
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
