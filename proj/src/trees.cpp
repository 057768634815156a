#include "mhopf/trees.hpp"

#include "mhopf/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace mhopf {

PlanarTree PlanarTree::node(std::vector<PlanarTree> children, std::optional<Letter> label) {
    PlanarTree t;
    t.leaf_ = false;
    t.label_ = label;
    t.children_ = std::move(children);
    return t;
}

std::size_t PlanarTree::internal_nodes() const {
    if (leaf_) return 0;
    std::size_t n = 1;
    for (const auto& c : children_) n += c.internal_nodes();
    return n;
}

std::optional<std::size_t> PlanarTree::uniform_arity() const {
    if (leaf_) return std::nullopt;
    std::size_t a = children_.size();
    for (const auto& c : children_) {
        if (c.is_leaf()) continue;
        auto ca = c.uniform_arity();
        if (!ca || *ca != a) return std::nullopt;
    }
    return a;
}

int compare(const PlanarTree& a, const PlanarTree& b) {
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
    if (a.is_leaf()) return 0;
    if (a.label() != b.label()) return a.label() < b.label() ? -1 : 1;
    const auto& ca = a.children();
    const auto& cb = b.children();
    for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
        if (int c = compare(ca[i], cb[i])) return c;
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
    return 0;
}

bool operator==(const PlanarTree& a, const PlanarTree& b) { return compare(a, b) == 0; }
bool operator<(const PlanarTree& a, const PlanarTree& b) { return compare(a, b) < 0; }

static void write_tree(const PlanarTree& t, std::string& out) {
    if (t.is_leaf()) {
        out += '.';
        return;
    }
    if (t.label()) out += std::to_string(*t.label());
    out += '(';
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += ',';
        write_tree(t.children()[i], out);
    }
    out += ')';
}

std::string tree_text(const PlanarTree& t) {
    std::string out;
    write_tree(t, out);
    return out;
}

namespace {

struct TreeParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw Error(ErrorCode::parse_error, "tree literal '" + s + "': " + why + " at offset " + std::to_string(pos));
    }
    PlanarTree parse() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        if (s[pos] == '.') {
            ++pos;
            return PlanarTree::leaf();
        }
        std::optional<Letter> label;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            unsigned long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
                if (v > 0xffffffffUL) fail("label too large");
                ++pos;
            }
            label = static_cast<Letter>(v);
            skip();
        }
        if (pos >= s.size() || s[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<PlanarTree> children;
        for (;;) {
            children.push_back(parse());
            skip();
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            fail("expected ',' or ')'");
        }
        return PlanarTree::node(std::move(children), label);
    }
};

}  // namespace

PlanarTree parse_tree(const std::string& text) {
    TreeParser p{text};
    PlanarTree t = p.parse();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing characters");
    return t;
}

std::string tree_dot(const PlanarTree& t) {
    std::ostringstream out;
    out << "digraph tree {\n  node [shape=circle];\n";
    std::size_t next = 0;
    std::function<std::size_t(const PlanarTree&)> emit = [&](const PlanarTree& u) {
        std::size_t id = next++;
        if (u.is_leaf()) {
            out << "  n" << id << " [shape=point];\n";
            return id;
        }
        out << "  n" << id << " [label=\"" << (u.label() ? std::to_string(*u.label()) : std::string()) << "\"];\n";
        for (const auto& c : u.children()) {
            std::size_t cid = emit(c);
            out << "  n" << id << " -> n" << cid << ";\n";
        }
        return id;
    };
    emit(t);
    out << "}\n";
    return out.str();
}

PlanarTree shape(const PlanarTree& t) {
    if (t.is_leaf()) return t;
    std::vector<PlanarTree> children;
    for (const auto& c : t.children()) children.push_back(shape(c));
    return PlanarTree::node(std::move(children));
}

PlanarTree decreasing_tree(const Word& w) {
    if (w.empty() || !is_packed(w)) throw Error(ErrorCode::not_packed, "decreasing_tree needs a nonempty packed word");
    const Letter n = max_letter(w);
    std::vector<std::vector<std::size_t>> occ(n + 1);
    for (std::size_t i = 0; i < w.size(); ++i) occ[w[i]].push_back(i);
    // slots[k][s] = label occupying child slot s of node k, or 0 for a leaf.
    std::vector<std::vector<Letter>> slots(n + 1);
    for (Letter k = 1; k <= n; ++k) slots[k].assign(occ[k].size() + 1, 0);

    auto last_slot = [&](Letter k) { return slots[k].size() - 1; };
    for (Letter i = n - 1; i >= 1; --i) {
        const std::size_t pos = occ[i].back();
        Letter at = 0;
        std::size_t slot = 0;
        for (Letter j = i + 1; j <= n && at == 0; ++j) {
            if (occ[j].front() < pos && occ[j].back() > pos) {
                at = j;
                slot = static_cast<std::size_t>(
                    std::count_if(occ[j].begin(), occ[j].end(), [&](std::size_t p) { return p < pos; }));
            }
        }
        if (at == 0) {
            at = n;
            slot = pos < occ[n].front() ? 0 : last_slot(n);
        }
        while (slots[at][slot] != 0) {
            const Letter x = slots[at][slot];
            at = x;
            slot = pos < occ[x].front() ? 0 : last_slot(x);
        }
        slots[at][slot] = i;
    }
    std::function<PlanarTree(Letter)> build = [&](Letter k) {
        std::vector<PlanarTree> children;
        for (Letter c : slots[k]) children.push_back(c == 0 ? PlanarTree::leaf() : build(c));
        return PlanarTree::node(std::move(children), k);
    };
    return build(n);
}

static void read_sectors(const PlanarTree& t, Word& out) {
    if (t.is_leaf()) return;
    const auto& ch = t.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i) out.push_back(*t.label());
        read_sectors(ch[i], out);
    }
}

Word canonical_word(const PlanarTree& t) {
    if (!is_decreasing_tree(t)) throw Error(ErrorCode::invalid_argument, "canonical_word needs a decreasing tree");
    Word out;
    read_sectors(t, out);
    return out;
}

bool is_decreasing_tree(const PlanarTree& t) {
    std::vector<Letter> labels;
    std::function<bool(const PlanarTree&, Letter)> walk = [&](const PlanarTree& u, Letter bound) {
        if (u.is_leaf()) return true;
        if (!u.label() || *u.label() == 0 || *u.label() >= bound) return false;
        labels.push_back(*u.label());
        for (const auto& c : u.children())
            if (!walk(c, *u.label())) return false;
        return true;
    };
    if (t.is_leaf() || !walk(t, static_cast<Letter>(-1))) return false;
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != i + 1) return false;
    return true;
}

namespace {

struct MutableBinary {
    Letter label;
    int left = -1, right = -1;
};

PlanarTree freeze(const std::vector<MutableBinary>& nodes, int i) {
    if (i < 0) return PlanarTree::leaf();
    return PlanarTree::node({freeze(nodes, nodes[i].left), freeze(nodes, nodes[i].right)}, nodes[i].label);
}

}  // namespace

PlanarTree sylvester_bst(const Word& w) {
    std::vector<MutableBinary> nodes;
    for (std::size_t k = w.size(); k-- > 0;) {
        const Letter x = w[k];
        nodes.push_back({x});
        const int id = static_cast<int>(nodes.size()) - 1;
        if (id == 0) continue;
        int at = 0;
        for (;;) {
            int& next = x <= nodes[at].label ? nodes[at].left : nodes[at].right;
            if (next < 0) {
                next = id;
                break;
            }
            at = next;
        }
    }
    return freeze(nodes, nodes.empty() ? -1 : 0);
}

Word duplicial_over(const Word& a, const Word& b) { return a + shift(b, static_cast<Letter>(a.size())); }

Word duplicial_under(const Word& a, const Word& b) {
    Letter k = a.empty() ? 0 : max_letter(a) - 1;
    return a + shift(b, k);
}

static bool is_binary(const PlanarTree& t) {
    if (t.is_leaf()) return true;
    return t.children().size() == 2 && is_binary(t.child(0)) && is_binary(t.child(1));
}

Word binary_to_ndpf(const PlanarTree& t) {
    if (!is_binary(t)) throw Error(ErrorCode::invalid_argument, "not a binary tree");
    if (t.is_leaf()) return {};
    Word y = duplicial_under(Word{1}, binary_to_ndpf(t.child(0)));
    if (t.child(1).is_leaf()) return y;
    return duplicial_over(binary_to_ndpf(t.child(1)), y);
}

PlanarTree ndpf_to_binary(const Word& p) {
    if (!is_ndpf(p, 1)) throw Error(ErrorCode::not_ndpf, "not a nondecreasing parking function");
    if (p.empty()) return PlanarTree::leaf();
    std::size_t k = 0;
    for (std::size_t j = 1; j <= p.size(); ++j)
        if (p[j - 1] == j) k = j - 1;
    Word right(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    Word left;
    for (std::size_t j = k + 1; j < p.size(); ++j) left.push_back(p[j] - static_cast<Letter>(k));
    return PlanarTree::binary(ndpf_to_binary(left), ndpf_to_binary(right));
}

namespace {

struct AryParser {
    const std::vector<Letter>& tokens;
    unsigned m;
    std::size_t pos = 0;

    PlanarTree parse(std::optional<Letter> carried) {
        Letter x;
        if (carried) {
            x = *carried;
        } else {
            if (pos >= tokens.size()) throw Error(ErrorCode::not_m_ndpf, "truncated evaluation word");
            x = tokens[pos++];
        }
        if (x == 0) return PlanarTree::leaf();
        std::vector<PlanarTree> children;
        children.push_back(parse(x - 1));
        for (unsigned k = 0; k < m; ++k) children.push_back(parse(std::nullopt));
        return PlanarTree::node(std::move(children));
    }
};

void encode_ary(const PlanarTree& t, std::vector<Letter>& out) {
    if (t.is_leaf()) {
        out.push_back(0);
        return;
    }
    const std::size_t first = out.size();
    encode_ary(t.child(0), out);
    out[first] += 1;
    for (std::size_t k = 1; k < t.children().size(); ++k) encode_ary(t.child(k), out);
}

}  // namespace

PlanarTree ndpf_to_ary(const Word& p, unsigned m) {
    if (m == 0 || p.empty() || !is_ndpf(p, m)) throw Error(ErrorCode::not_m_ndpf, "not a nondecreasing m-parking function");
    const std::size_t n = p.size();
    std::vector<Letter> tokens(m * (n - 1) + 1, 0);
    for (Letter x : p) ++tokens[x - 1];
    tokens.insert(tokens.end(), m, 0);
    AryParser parser{tokens, m};
    PlanarTree t = parser.parse(std::nullopt);
    if (parser.pos != tokens.size()) throw Error(ErrorCode::not_m_ndpf, "evaluation word not fully consumed");
    return t;
}

Word ary_to_ndpf(const PlanarTree& t, unsigned m) {
    if (t.is_leaf() || t.uniform_arity() != m + 1)
        throw Error(ErrorCode::invalid_argument, "not a nonempty (m+1)-ary tree");
    std::vector<Letter> tokens;
    encode_ary(t, tokens);
    tokens.resize(tokens.size() - m);
    Word p;
    for (std::size_t i = 0; i < tokens.size(); ++i)
        for (Letter k = 0; k < tokens[i]; ++k) p.push_back(static_cast<Letter>(i + 1));
    return p;
}

PlanarTree graft_leftmost(const PlanarTree& t, const PlanarTree& s) {
    if (t.is_leaf()) return s;
    PlanarTree r = t;
    r.child(0) = graft_leftmost(t.child(0), s);
    return r;
}

PlanarTree graft_rightmost(const PlanarTree& t, const PlanarTree& s) {
    if (t.is_leaf()) return s;
    PlanarTree r = t;
    const std::size_t last = t.children().size() - 1;
    r.child(last) = graft_rightmost(t.child(last), s);
    return r;
}

PlanarTree ary_to_mbinary(const PlanarTree& t, unsigned m) {
    if (m == 0) throw Error(ErrorCode::invalid_argument, "m must be positive");
    Word q = ary_to_ndpf(t, m);
    Word p;
    for (Letter x : q)
        for (unsigned k = 0; k < m; ++k) p.push_back(x);
    return ndpf_to_binary(p);
}

static std::optional<PlanarTree> decode_mbinary(const PlanarTree& t, unsigned m) {
    if (t.is_leaf()) return t;
    if (t.children().size() != 2) return std::nullopt;
    std::vector<PlanarTree> children(m + 1);
    auto right = decode_mbinary(t.child(1), m);
    if (!right) return std::nullopt;
    children[m] = *right;
    PlanarTree x = t.child(0);
    for (unsigned j = m; j >= 2; --j) {
        if (x.is_leaf()) return std::nullopt;
        // Detach the last node of the right spine.
        std::function<PlanarTree(const PlanarTree&, PlanarTree&)> detach = [&](const PlanarTree& u, PlanarTree& s) {
            if (u.child(1).is_leaf()) {
                s = u;
                return PlanarTree::leaf();
            }
            PlanarTree r = u;
            r.child(1) = detach(u.child(1), s);
            return r;
        };
        PlanarTree s;
        PlanarTree a = detach(x, s);
        auto cj = decode_mbinary(a, m);
        if (!cj) return std::nullopt;
        children[j - 1] = *cj;
        x = s.child(0);
    }
    auto first = decode_mbinary(x, m);
    if (!first) return std::nullopt;
    children[0] = *first;
    return PlanarTree::node(std::move(children));
}

PlanarTree mbinary_to_ary(const PlanarTree& t, unsigned m) {
    if (!is_m_binary(t, m)) throw Error(ErrorCode::not_m_binary, "not an m-binary tree: " + tree_text(t));
    Word p = binary_to_ndpf(shape(t));
    Word q;
    for (std::size_t i = 0; i < p.size(); i += m) {
        for (std::size_t j = i + 1; j < i + m; ++j)
            if (p[j] != p[i]) throw Error(ErrorCode::not_m_binary, "not an m-binary tree: " + tree_text(t));
        q.push_back(p[i]);
    }
    return ndpf_to_ary(q, m);
}

bool is_m_binary(const PlanarTree& t, unsigned m) {
    return m >= 1 && is_binary(t) && t.internal_nodes() % m == 0 && decode_mbinary(shape(t), m).has_value();
}

static void rotations(const PlanarTree& t, bool right, std::vector<PlanarTree>& out) {
    if (t.is_leaf()) return;
    const PlanarTree& l = t.child(0);
    const PlanarTree& r = t.child(1);
    if (right && !l.is_leaf())
        out.push_back(PlanarTree::binary(l.child(0), PlanarTree::binary(l.child(1), r)));
    if (!right && !r.is_leaf())
        out.push_back(PlanarTree::binary(PlanarTree::binary(l, r.child(0)), r.child(1)));
    std::vector<PlanarTree> sub;
    rotations(l, right, sub);
    for (auto& s : sub) out.push_back(PlanarTree::binary(std::move(s), r));
    sub.clear();
    rotations(r, right, sub);
    for (auto& s : sub) out.push_back(PlanarTree::binary(l, std::move(s)));
}

std::vector<PlanarTree> right_rotations(const PlanarTree& t) {
    std::vector<PlanarTree> out;
    rotations(shape(t), true, out);
    return out;
}

std::vector<PlanarTree> left_rotations(const PlanarTree& t) {
    std::vector<PlanarTree> out;
    rotations(shape(t), false, out);
    return out;
}

static std::vector<PlanarTree> rotation_closure(const PlanarTree& t, bool up) {
    std::set<PlanarTree> seen{shape(t)};
    std::deque<PlanarTree> queue{shape(t)};
    while (!queue.empty()) {
        PlanarTree u = std::move(queue.front());
        queue.pop_front();
        for (auto& v : up ? right_rotations(u) : left_rotations(u))
            if (seen.insert(v).second) queue.push_back(v);
    }
    return {seen.begin(), seen.end()};
}

std::vector<PlanarTree> tamari_up_set(const PlanarTree& t) { return rotation_closure(t, true); }
std::vector<PlanarTree> tamari_down_set(const PlanarTree& t) { return rotation_closure(t, false); }

bool tamari_leq(const PlanarTree& a, const PlanarTree& b, unsigned m) {
    if (a.internal_nodes() != b.internal_nodes())
        throw Error(ErrorCode::size_mismatch, "trees have different node counts");
    PlanarTree x = m == 0 ? shape(a) : ary_to_mbinary(shape(a), m);
    PlanarTree y = m == 0 ? shape(b) : ary_to_mbinary(shape(b), m);
    if (!is_binary(x) || !is_binary(y)) throw Error(ErrorCode::invalid_argument, "not binary trees");
    auto up = tamari_up_set(x);
    return std::binary_search(up.begin(), up.end(), y);
}

PlanarTree comb_tree(unsigned m, unsigned n) {
    if (n == 0) return PlanarTree::leaf();
    PlanarTree chain = PlanarTree::leaf();
    for (unsigned k = 1; k < m; ++k) chain = PlanarTree::binary(chain, PlanarTree::leaf());
    return PlanarTree::binary(chain, comb_tree(m, n - 1));
}

std::vector<PlanarTree> enumerate_ary_trees(unsigned n, unsigned arity, std::size_t budget) {
    if (arity == 0) throw Error(ErrorCode::invalid_argument, "arity must be positive");
    if (binomial(arity * n, n) / ((arity - 1) * n + 1) > budget)
        throw Error(ErrorCode::budget_exceeded, "too many trees to enumerate");
    std::vector<std::vector<PlanarTree>> by_size(n + 1);
    by_size[0] = {PlanarTree::leaf()};
    for (unsigned s = 1; s <= n; ++s) {
        std::vector<PlanarTree> cur;
        std::vector<PlanarTree> children(arity);
        std::function<void(unsigned, unsigned)> fill = [&](unsigned k, unsigned left) {
            if (k + 1 == arity) {
                for (const auto& c : by_size[left]) {
                    children[k] = c;
                    cur.push_back(PlanarTree::node(children));
                }
                return;
            }
            for (unsigned take = 0; take <= left; ++take)
                for (const auto& c : by_size[take]) {
                    children[k] = c;
                    fill(k + 1, left - take);
                }
        };
        fill(0, s - 1);
        by_size[s] = std::move(cur);
    }
    auto out = by_size[n];
    std::sort(out.begin(), out.end());
    return out;
}

static PlanarTree replace_leaf(const PlanarTree& t, std::size_t& index, const PlanarTree& with) {
    if (t.is_leaf()) {
        if (index == 0) {
            index = static_cast<std::size_t>(-1);
            return with;
        }
        --index;
        return t;
    }
    PlanarTree r = t;
    for (auto& c : r.children()) {
        c = replace_leaf(c, index, with);
        if (index == static_cast<std::size_t>(-1)) break;
    }
    return r;
}

std::vector<PlanarTree> enumerate_decreasing_trees(unsigned n, unsigned arity, std::size_t budget) {
    if (n == 0) return {PlanarTree::leaf()};
    Integer count = 1;
    for (unsigned k = 1; k < n; ++k) count *= 1 + k * (arity - 1);
    if (count > budget) throw Error(ErrorCode::budget_exceeded, "too many decreasing trees to enumerate");
    auto fresh = [&](Letter label) { return PlanarTree::node(std::vector<PlanarTree>(arity), label); };
    std::vector<PlanarTree> cur{fresh(static_cast<Letter>(n))};
    for (Letter label = static_cast<Letter>(n) - 1; label >= 1; --label) {
        std::vector<PlanarTree> next;
        for (const auto& t : cur) {
            const std::size_t leaves = 1 + (arity - 1) * t.internal_nodes();
            for (std::size_t i = 0; i < leaves; ++i) {
                std::size_t idx = i;
                next.push_back(replace_leaf(t, idx, fresh(label)));
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

}  // namespace mhopf
