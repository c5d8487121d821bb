#include "wordtrie/dict.hpp"

#include <algorithm>
#include <utility>

#include "wordtrie/unicode.hpp"

namespace wordtrie {

BoundaryConfig& BoundaryConfig::set_word_chars(std::u32string_view chars) {
    ascii_.fill(false);
    extra_.clear();
    count_ = 0;
    return add_word_chars(chars);
}

BoundaryConfig& BoundaryConfig::add_word_chars(std::u32string_view chars) {
    for (char32_t c : chars) {
        if (c < 128) {
            if (!ascii_[c]) {
                ascii_[c] = true;
                ++count_;
            }
        } else if (extra_.insert(c).second) {
            ++count_;
        }
    }
    return *this;
}

char32_t BoundaryConfig::fold(char32_t c) const noexcept {
    return case_insensitive_ ? fold_scalar(c) : c;
}

std::u32string BoundaryConfig::fold_copy(std::u32string_view s) const {
    std::u32string out(s);
    if (case_insensitive_) {
        for (char32_t& c : out) c = fold_scalar(c);
    }
    return out;
}

KeywordDict::KeywordDict(BoundaryConfig config) : config_(std::move(config)) {
    if (config_.word_char_count() == 0) {
        throw InvalidConfigError("word-character set must not be empty");
    }
}

void KeywordDict::require_unfrozen() const {
    if (frozen_) throw FrozenError("dictionary is frozen");
}

bool KeywordDict::add(std::u32string_view keyword, std::u32string_view standardized) {
    require_unfrozen();
    if (keyword.empty()) throw InvalidEntryError("empty keyword");
    if (standardized.empty()) throw InvalidEntryError("empty standardized name");

    BuildNode* node = &root_;
    for (char32_t c : keyword) {
        node = &node->children[config_.fold(c)];
    }
    const bool fresh = !node->payload.has_value();
    node->payload = std::u32string(standardized);
    if (fresh) ++count_;
    return fresh;
}

bool KeywordDict::add(std::string_view keyword_utf8, std::string_view standardized_utf8) {
    return add(decode_utf8(keyword_utf8), decode_utf8(standardized_utf8));
}

std::size_t KeywordDict::add_mapping(std::u32string_view standardized,
                                     std::span<const std::u32string> synonyms) {
    require_unfrozen();
    if (synonyms.empty()) throw InvalidEntryError("empty synonym list");
    std::size_t fresh = 0;
    for (const std::u32string& synonym : synonyms) {
        if (add(synonym, standardized)) ++fresh;
    }
    return fresh;
}

bool KeywordDict::remove(std::u32string_view keyword) {
    require_unfrozen();
    if (keyword.empty()) return false;

    // Walk down remembering the path, then unwind pruning nodes that end
    // up childless without a payload.
    std::vector<std::pair<BuildNode*, char32_t>> path;
    path.reserve(keyword.size());
    BuildNode* node = &root_;
    for (char32_t c : keyword) {
        const char32_t folded = config_.fold(c);
        auto it = node->children.find(folded);
        if (it == node->children.end()) return false;
        path.emplace_back(node, folded);
        node = &it->second;
    }
    if (!node->payload.has_value()) return false;
    node->payload.reset();
    --count_;

    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        BuildNode& child = it->first->children.at(it->second);
        if (!child.children.empty() || child.payload.has_value()) break;
        it->first->children.erase(it->second);
    }
    return true;
}

std::optional<std::u32string> KeywordDict::get(std::u32string_view keyword) const {
    if (!frozen_) {
        const BuildNode* node = &root_;
        for (char32_t c : keyword) {
            auto it = node->children.find(config_.fold(c));
            if (it == node->children.end()) return std::nullopt;
            node = &it->second;
        }
        return node->payload;
    }
    std::uint32_t node = 0;
    for (char32_t c : keyword) {
        node = step(node, config_.fold(c));
        if (node == npos) return std::nullopt;
    }
    if (const std::u32string* p = payload(node)) return *p;
    return std::nullopt;
}

void KeywordDict::freeze() {
    if (frozen_) return;

    // Breadth-first compilation into flat arrays; children are emitted in
    // map (label) order, so edge ranges are sorted.
    std::vector<const BuildNode*> order;
    order.push_back(&root_);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& [label, child] : order[i]->children) {
            (void)label;
            order.push_back(&child);
        }
    }

    const std::size_t node_count = order.size();
    first_edge_.assign(node_count + 1, 0);
    payload_of_.assign(node_count, -1);
    labels_.clear();
    targets_.clear();
    payloads_.clear();

    std::uint32_t next_id = 1;
    for (std::size_t i = 0; i < node_count; ++i) {
        const BuildNode* node = order[i];
        first_edge_[i] = static_cast<std::uint32_t>(labels_.size());
        for (const auto& [label, child] : node->children) {
            (void)child;
            labels_.push_back(label);
            targets_.push_back(next_id++);
        }
        if (node->payload.has_value()) {
            payload_of_[i] = static_cast<std::int32_t>(payloads_.size());
            payloads_.push_back(*node->payload);
        }
    }
    first_edge_[node_count] = static_cast<std::uint32_t>(labels_.size());

    // Drain the build tree iteratively; plain clear() would recurse per
    // keyword character.
    std::vector<std::map<char32_t, BuildNode>> pool;
    pool.push_back(std::move(root_.children));
    root_ = BuildNode{};
    while (!pool.empty()) {
        std::map<char32_t, BuildNode> level = std::move(pool.back());
        pool.pop_back();
        for (auto& [label, child] : level) {
            (void)label;
            if (!child.children.empty()) pool.push_back(std::move(child.children));
        }
    }

    frozen_ = true;
}

std::uint32_t KeywordDict::root_node() const {
    if (!frozen_) throw NotFrozenError("scan requires a frozen dictionary");
    return 0;
}

std::uint32_t KeywordDict::step(std::uint32_t node, char32_t folded_scalar) const noexcept {
    const std::uint32_t lo = first_edge_[node];
    const std::uint32_t hi = first_edge_[node + 1];
    const char32_t* begin = labels_.data() + lo;
    const char32_t* end = labels_.data() + hi;
    const char32_t* it = std::lower_bound(begin, end, folded_scalar);
    if (it == end || *it != folded_scalar) return npos;
    return targets_[static_cast<std::size_t>(it - labels_.data())];
}

const std::u32string* KeywordDict::payload(std::uint32_t node) const noexcept {
    const std::int32_t idx = payload_of_[node];
    return idx < 0 ? nullptr : &payloads_[static_cast<std::size_t>(idx)];
}

bool KeywordDict::check_invariants() const {
    if (!frozen_) {
        std::size_t terminals = 0;
        std::vector<std::pair<const BuildNode*, bool>> stack;  // node, is_root
        stack.emplace_back(&root_, true);
        while (!stack.empty()) {
            auto [node, is_root] = stack.back();
            stack.pop_back();
            if (node->payload.has_value()) ++terminals;
            if (!is_root && node->children.empty() && !node->payload.has_value()) return false;
            for (const auto& [label, child] : node->children) {
                (void)label;
                stack.emplace_back(&child, false);
            }
        }
        return terminals == count_;
    }
    std::size_t terminals = 0;
    const std::size_t node_count = payload_of_.size();
    for (std::size_t i = 0; i < node_count; ++i) {
        const bool has_payload = payload_of_[i] >= 0;
        if (has_payload) ++terminals;
        const bool childless = first_edge_[i] == first_edge_[i + 1];
        if (i != 0 && childless && !has_payload) return false;
    }
    return terminals == count_ && terminals == payloads_.size();
}

}  // namespace wordtrie
