// Text recipes: indentation-based trees of builder operations evaluated
// bottom-up into a verified perfect coloring.
#include <fstream>
#include <sstream>

#include "construct_util.hpp"
#include "doob/constructions.hpp"

namespace doob {

namespace {

struct RecipeNode {
  std::string op;
  std::vector<std::string> args;
  std::vector<RecipeNode> children;
  int line_no = 0;
};

[[noreturn]] void fail(const RecipeNode& n, const std::string& msg) {
  throw std::invalid_argument("recipe line " + std::to_string(n.line_no) + " (" + n.op +
                              "): " + msg);
}

int int_arg(const RecipeNode& n, size_t i) {
  if (i >= n.args.size()) fail(n, "missing argument " + std::to_string(i + 1));
  try {
    size_t pos = 0;
    int v = std::stoi(n.args[i], &pos);
    if (pos != n.args[i].size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail(n, "argument '" + n.args[i] + "' is not an integer");
  }
}

void need_args(const RecipeNode& n, size_t count) {
  if (n.args.size() != count)
    fail(n, "expected " + std::to_string(count) + " arguments, got " +
            std::to_string(n.args.size()));
}

void need_children(const RecipeNode& n, size_t count) {
  if (n.children.size() != count)
    fail(n, "expected " + std::to_string(count) + " child operations, got " +
            std::to_string(n.children.size()));
}

std::vector<RecipeNode> parse_nodes(const std::string& text) {
  std::vector<RecipeNode> roots;
  std::vector<RecipeNode*> stack; // stack[d] = last node at depth d
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') ++indent;
    std::string body = line.substr(indent);
    if (body.empty() || body[0] == '#') continue;
    if (indent % 2 != 0)
      throw std::invalid_argument("recipe line " + std::to_string(line_no) +
                                  ": indentation must be a multiple of two spaces");
    size_t depth = indent / 2;
    if (depth > stack.size())
      throw std::invalid_argument("recipe line " + std::to_string(line_no) +
                                  ": indentation skips a level");
    RecipeNode node;
    node.line_no = line_no;
    std::istringstream ts(body);
    ts >> node.op;
    std::string tok;
    while (ts >> tok) node.args.push_back(tok);
    stack.resize(depth);
    std::vector<RecipeNode>& siblings =
        depth == 0 ? roots : stack.back()->children;
    siblings.push_back(std::move(node));
    stack.push_back(&siblings.back());
  }
  return roots;
}

Coloring eval_node(const RecipeNode& n);

GraphSpec spec_args(const RecipeNode& n, size_t at) {
  GraphSpec s{int_arg(n, at), int_arg(n, at + 1)};
  validate(s);
  return s;
}

Coloring eval_node(const RecipeNode& n) {
  if (n.op == "mds") {
    need_args(n, 2);
    need_children(n, 0);
    return mds_partition(spec_args(n, 0)).coloring;
  }
  if (n.op == "codepart") {
    need_args(n, 2);
    need_children(n, 0);
    return perfect_code_partition(spec_args(n, 0)).coloring;
  }
  if (n.op == "threej") {
    need_args(n, 2);
    need_children(n, 0);
    return three_j(spec_args(n, 0));
  }
  if (n.op == "threejme") {
    need_args(n, 2);
    need_children(n, 0);
    return three_j_minus_e(spec_args(n, 0));
  }
  if (n.op == "gammamds") {
    need_args(n, 3);
    need_children(n, 0);
    return gamma_mds_coloring(spec_args(n, 0), int_arg(n, 2));
  }
  if (n.op == "bc") {
    need_args(n, 2);
    need_children(n, 0);
    return build_bc_coloring(int_arg(n, 0), int_arg(n, 1)).coloring;
  }
  if (n.op == "extend") {
    need_args(n, 2);
    need_children(n, 1);
    return extend(eval_node(n.children[0]), int_arg(n, 0), int_arg(n, 1));
  }
  if (n.op == "multiply") {
    need_args(n, 3);
    need_children(n, 1);
    return multiply_coloring(eval_node(n.children[0]), int_arg(n, 0), int_arg(n, 1),
                             int_arg(n, 2));
  }
  if (n.op == "split") {
    need_args(n, 1);
    need_children(n, 1);
    return split_coloring(eval_node(n.children[0]), int_arg(n, 0));
  }
  if (n.op == "merge") {
    need_children(n, 1);
    if (n.args.empty()) fail(n, "needs at least one color group");
    std::vector<std::vector<int>> groups;
    for (const std::string& a : n.args) {
      std::vector<int> group;
      std::istringstream gs(a);
      std::string piece;
      while (std::getline(gs, piece, ',')) {
        try {
          group.push_back(std::stoi(piece));
        } catch (const std::exception&) {
          fail(n, "bad color group '" + a + "'");
        }
      }
      if (group.empty()) fail(n, "bad color group '" + a + "'");
      groups.push_back(std::move(group));
    }
    Coloring merged = merge_colors(eval_node(n.children[0]), groups);
    QuotientResult r = compute_quotient(merged);
    if (!r.ok()) fail(n, "merged coloring is not perfect: " + r.failure->to_string());
    return merged;
  }
  if (n.op == "sum") {
    need_args(n, 0);
    need_children(n, 2);
    return sum_compose(eval_node(n.children[0]), eval_node(n.children[1]));
  }
  if (n.op == "diag") {
    if (n.args.empty()) fail(n, "needs the diagonal block sizes");
    std::vector<int> blocks;
    for (size_t i = 0; i < n.args.size(); ++i) blocks.push_back(int_arg(n, i));
    need_children(n, blocks.size() + 1);
    Coloring g = eval_node(n.children[0]);
    std::vector<Coloring> hs;
    for (size_t i = 1; i < n.children.size(); ++i) hs.push_back(eval_node(n.children[i]));
    return diag_product(g, blocks, hs);
  }
  if (n.op == "tiling") {
    need_args(n, 0);
    if (n.children.size() < 2) fail(n, "needs a base coloring and a family");
    Coloring g = eval_node(n.children[0]);
    std::vector<Coloring> family;
    for (size_t i = 1; i < n.children.size(); ++i) family.push_back(eval_node(n.children[i]));
    return tiling_compose(g, family).colorings[0];
  }
  fail(n, "unknown operation");
}

} // namespace

RecipeResult eval_recipe_text(const std::string& text) {
  std::vector<RecipeNode> roots = parse_nodes(text);
  if (roots.size() != 1)
    throw std::invalid_argument("recipe must contain exactly one top-level operation");
  RecipeResult out;
  out.coloring = eval_node(roots[0]);
  QuotientResult r = compute_quotient(out.coloring);
  if (!r.ok())
    throw std::logic_error("recipe result failed verification: " + r.failure->to_string());
  out.quotient = *r.matrix;
  out.summary = roots[0].op + " -> " + detail::spec_str(out.coloring.spec) + ", " +
                std::to_string(out.coloring.k) + " colors";
  return out;
}

RecipeResult eval_recipe_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return eval_recipe_text(ss.str());
}

} // namespace doob
