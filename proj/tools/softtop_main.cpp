// Command-line front end: loads declarative structure files, runs the
// library operations on them, and drives the theorem-checking harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "softtop/constructions.hpp"
#include "softtop/document.hpp"
#include "softtop/errors.hpp"
#include "softtop/funcspace.hpp"
#include "softtop/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitCounterexample = 4;

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot open file: " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitUsage, "cannot write file: " + path};
  out << text;
}

softtop::StructureDocument load(const std::string& path) {
  softtop::ParseResult result = softtop::parse_document(read_file(path));
  if (!result.ok()) {
    std::string message;
    for (const auto& diagnostic : result.diagnostics) {
      if (!message.empty()) message += "\n";
      message += path + ": " + diagnostic.render();
    }
    throw Failure{kExitValidation, message};
  }
  return std::move(*result.document);
}

const softtop::NamedSpace& need_space(const softtop::StructureDocument& doc,
                                      const std::string& name) {
  const auto* entry = doc.find_space(name);
  if (!entry) throw Failure{kExitUsage, "no space named \"" + name + "\" in the document"};
  return *entry;
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_validate(const std::string& path) {
  softtop::StructureDocument doc = load(path);
  std::cout << path << ": valid (" << doc.spaces.size() << " spaces, "
            << doc.soft_sets.size() << " soft sets, " << doc.mappings.size()
            << " mappings)\n";
  return kExitOk;
}

int cmd_generate(const std::string& path, const std::string& subbase_csv,
                 const std::string& out_path, const std::string& name,
                 std::size_t max_opens) {
  softtop::StructureDocument doc = load(path);
  std::vector<softtop::SoftSet> subbase;
  softtop::ContextPtr ctx;
  for (const auto& set_name : split_names(subbase_csv)) {
    const auto* entry = doc.find_soft_set(set_name);
    if (!entry)
      throw Failure{kExitUsage, "no soft set named \"" + set_name + "\" in the document"};
    if (!ctx)
      ctx = entry->value.context();
    else if (!softtop::same_context(ctx, entry->value.context()))
      throw Failure{kExitUsage, "subbase members live in different spaces"};
    subbase.push_back(entry->value);
  }
  if (!ctx) throw Failure{kExitUsage, "--subbase needs at least one named soft set"};

  softtop::GeneratedSpace generated =
      softtop::generate_from_subbase(ctx, std::move(subbase), {max_opens});

  softtop::StructureDocument out;
  out.params = ctx->params();
  out.spaces.push_back({name, generated.space});
  write_file(out_path, softtop::emit_document(out));
  std::cout << "generated " << generated.space.open_count() << " opens into " << out_path
            << "\n";
  return kExitOk;
}

int cmd_closure(const std::string& path, const std::string& space_name,
                const std::string& set_name) {
  softtop::StructureDocument doc = load(path);
  const auto& space = need_space(doc, space_name);
  const auto* entry = doc.find_soft_set(set_name);
  if (!entry)
    throw Failure{kExitUsage, "no soft set named \"" + set_name + "\" in the document"};
  if (entry->space != space_name)
    throw Failure{kExitUsage,
                  "soft set \"" + set_name + "\" is bound to space \"" + entry->space +
                      "\", not \"" + space_name + "\""};
  std::cout << softtop::soft_set_literal(space.space.closure(entry->value)) << "\n";
  return kExitOk;
}

int cmd_continuity(const std::string& path, const std::string& map_name,
                   const std::string& at) {
  softtop::StructureDocument doc = load(path);
  const auto* entry = doc.find_mapping(map_name);
  if (!entry)
    throw Failure{kExitUsage, "no mapping named \"" + map_name + "\" in the document"};
  const auto& source = need_space(doc, entry->from).space;
  const auto& target = need_space(doc, entry->to).space;

  if (!at.empty()) {
    auto parts = split_names(at);
    if (parts.size() != 2) throw Failure{kExitUsage, "--at expects element,parameter"};
    softtop::SoftPoint p =
        softtop::SoftPoint::make(source.context(), parts[0], parts[1]);
    const bool ok = softtop::is_continuous_at(entry->value, source, target, p);
    std::cout << map_name << " is " << (ok ? "" : "not ") << "soft continuous at "
              << p.to_string() << "\n";
    return ok ? kExitOk : kExitValidation;
  }

  softtop::ContinuityResult result = softtop::is_continuous(entry->value, source, target);
  if (result.holds) {
    std::cout << map_name << " is soft continuous\n";
    return kExitOk;
  }
  std::cout << map_name << " is not soft continuous; witness open "
            << result.witness->to_string() << " has preimage "
            << entry->value.preimage(*result.witness).to_string() << "\n";
  return kExitValidation;
}

int cmd_combine(bool product, const std::string& path, const std::string& spaces_csv,
                const std::string& out_path, const std::string& name,
                std::size_t max_opens) {
  softtop::StructureDocument doc = load(path);
  std::vector<softtop::SoftSpace> members;
  for (const auto& space_name : split_names(spaces_csv))
    members.push_back(need_space(doc, space_name).space);
  if (members.empty()) throw Failure{kExitUsage, "--spaces needs at least one name"};
  softtop::SpaceFamily family = softtop::SpaceFamily::of(std::move(members));

  softtop::StructureDocument out;
  out.params = family.members.front().context()->params();
  if (product) {
    softtop::ProductSpace prod = softtop::product_space(family, {max_opens});
    out.spaces.push_back({name, prod.space});
  } else {
    softtop::SumSpace sum = softtop::sum_space(family);
    out.spaces.push_back({name, sum.space});
  }
  write_file(out_path, softtop::emit_document(out));
  std::cout << "wrote " << out.spaces[0].space.open_count() << " opens into " << out_path
            << "\n";
  return kExitOk;
}

int cmd_funcspace(const std::string& path, const std::string& domain_name,
                  const std::string& codomain_name, const std::string& out_path,
                  const std::string& name, std::size_t max_opens,
                  std::size_t max_functions) {
  softtop::StructureDocument doc = load(path);
  const auto& domain = need_space(doc, domain_name);
  const auto& codomain = need_space(doc, codomain_name);

  std::optional<softtop::FunctionSpace> built;
  try {
    built = softtop::pointwise_space(domain.space, codomain.space,
                                     {max_functions, {max_opens}});
  } catch (const softtop::EmptyFunctionSpace& e) {
    throw Failure{kExitValidation, std::string("cannot build the function space: ") +
                                       e.what()};
  }
  const softtop::FunctionSpace& fs = *built;

  softtop::StructureDocument out;
  out.params = domain.space.context()->params();
  out.spaces.push_back({domain.name, domain.space});
  out.spaces.push_back({codomain.name, codomain.space});
  out.spaces.push_back({name, fs.space});
  for (std::size_t i = 0; i < fs.functions.size(); ++i)
    out.mappings.push_back(
        {fs.fn_context->element_name(i), domain.name, codomain.name, fs.functions[i]});
  write_file(out_path, softtop::emit_document(out));
  std::cout << "enumerated " << fs.functions.size() << " soft continuous mappings; "
            << fs.space.open_count() << " opens in the pointwise topology; wrote "
            << out_path << "\n";
  return kExitOk;
}

int cmd_theorems(const std::string& claim_name, bool exhaustive, std::size_t samples,
                 std::uint64_t seed, const std::string& variant_name, bool as_json,
                 std::size_t max_opens, bool no_shrink) {
  softtop::RunOptions options;
  options.exhaustive = exhaustive;
  options.samples = samples;
  options.seed = seed;
  options.limits = {max_opens};
  options.shrink_counterexamples = !no_shrink;

  std::vector<softtop::SeparationVariant> variants;
  if (!variant_name.empty()) {
    auto v = softtop::parse_variant(variant_name);
    if (!v) throw Failure{kExitUsage, "unknown variant: " + variant_name};
    variants.push_back(*v);
  } else {
    variants = {softtop::SeparationVariant::FullDisjoint,
                softtop::SeparationVariant::ParamDisjoint,
                softtop::SeparationVariant::PointAbsent};
  }

  std::vector<softtop::Claim> claims;
  if (claim_name == "all") {
    for (const auto& info : softtop::claim_registry()) claims.push_back(info.id);
  } else {
    try {
      claims.push_back(softtop::parse_claim(claim_name));
    } catch (const softtop::UnknownClaim&) {
      throw Failure{kExitUsage, "unknown claim id: " + claim_name};
    }
  }

  bool law_failed = false;
  std::string json_out = "[";
  bool first = true;
  for (softtop::Claim claim : claims) {
    // separation transfer is reported once per requested variant
    std::vector<std::optional<softtop::SeparationVariant>> runs;
    if (claim == softtop::Claim::Thm4) {
      for (auto v : variants) runs.emplace_back(v);
    } else {
      runs.emplace_back(std::nullopt);
    }
    for (const auto& variant : runs) {
      softtop::RunOptions opts = options;
      opts.variant = variant;
      softtop::VerdictReport report = softtop::run_claim(claim, opts);
      law_failed = law_failed || !report.passed();
      if (as_json) {
        if (!first) json_out += ",";
        first = false;
        json_out += report.to_json();
      } else {
        std::cout << report.render();
      }
    }
  }
  if (as_json) std::cout << json_out << "]\n";
  return law_failed ? kExitCounterexample : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite soft-set topology workbench"};
  app.require_subcommand(1);

  std::string file, out_path, subbase_csv, spaces_csv, space_name, set_name;
  std::string gen_name = "generated", prod_name = "product", sum_name = "sum";
  std::string fs_name = "funcspace";
  std::string map_name, at, claim_name = "all", variant_name;
  std::string domain_name, codomain_name;
  std::size_t max_opens = 4096, max_functions = 4096, samples = 50;
  std::uint64_t seed = 1;
  bool exhaustive = false, as_json = false, no_shrink = false;

  auto* validate = app.add_subcommand("validate", "load a document and report axiom status");
  validate->add_option("file", file)->required();

  auto* generate =
      app.add_subcommand("generate", "generate a topology from named soft sets");
  generate->add_option("file", file)->required();
  generate->add_option("--subbase", subbase_csv, "comma separated soft set names")
      ->required();
  generate->add_option("--out", out_path)->required();
  generate->add_option("--name", gen_name);
  generate->add_option("--max-opens", max_opens);

  auto* closure = app.add_subcommand("closure", "soft closure of a named soft set");
  closure->add_option("file", file)->required();
  closure->add_option("--space", space_name)->required();
  closure->add_option("--set", set_name)->required();

  auto* continuity = app.add_subcommand("continuity", "check a named mapping");
  continuity->add_option("file", file)->required();
  continuity->add_option("--map", map_name)->required();
  continuity->add_option("--at", at, "element,parameter for the pointwise check");

  auto* product = app.add_subcommand("product", "product of named spaces");
  product->add_option("file", file)->required();
  product->add_option("--spaces", spaces_csv)->required();
  product->add_option("--out", out_path)->required();
  product->add_option("--name", prod_name);
  product->add_option("--max-opens", max_opens);

  auto* sum = app.add_subcommand("sum", "topological sum of named spaces");
  sum->add_option("file", file)->required();
  sum->add_option("--spaces", spaces_csv)->required();
  sum->add_option("--out", out_path)->required();
  sum->add_option("--name", sum_name);

  auto* funcspace = app.add_subcommand(
      "funcspace", "enumerate soft continuous mappings and their pointwise topology");
  funcspace->add_option("file", file)->required();
  funcspace->add_option("--domain", domain_name)->required();
  funcspace->add_option("--codomain", codomain_name)->required();
  funcspace->add_option("--out", out_path)->required();
  funcspace->add_option("--name", fs_name);
  funcspace->add_option("--max-opens", max_opens);
  funcspace->add_option("--max-functions", max_functions);

  auto* theorems = app.add_subcommand("theorems", "run the claim-checking harness");
  theorems->add_option("--claim", claim_name, "claim id or 'all'");
  auto* exh = theorems->add_flag("--exhaustive", exhaustive, "iterate the bounded grid");
  theorems->add_option("--samples", samples, "seeded instances per claim")->excludes(exh);
  theorems->add_option("--seed", seed);
  theorems->add_option("--variant", variant_name, "full | param | point");
  theorems->add_flag("--json", as_json);
  theorems->add_option("--max-opens", max_opens);
  theorems->add_flag("--no-shrink", no_shrink, "skip counterexample minimization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (generate->parsed())
      return cmd_generate(file, subbase_csv, out_path, gen_name, max_opens);
    if (closure->parsed()) return cmd_closure(file, space_name, set_name);
    if (continuity->parsed()) return cmd_continuity(file, map_name, at);
    if (product->parsed())
      return cmd_combine(true, file, spaces_csv, out_path, prod_name, max_opens);
    if (sum->parsed()) return cmd_combine(false, file, spaces_csv, out_path, sum_name, max_opens);
    if (funcspace->parsed())
      return cmd_funcspace(file, domain_name, codomain_name, out_path, fs_name, max_opens,
                           max_functions);
    if (theorems->parsed())
      return cmd_theorems(claim_name, exhaustive, samples, seed, variant_name, as_json,
                          max_opens == 4096 ? 65536 : max_opens, no_shrink);
  } catch (const Failure& failure) {
    std::cerr << failure.message << "\n";
    return failure.code;
  } catch (const softtop::ResourceLimitError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const softtop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
