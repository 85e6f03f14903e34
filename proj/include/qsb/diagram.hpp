#pragma once

#include "qsb/scalar.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsb {

// Object word over {S, V}, left factor first.
using Word = std::string;

struct TypeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class NodeKind { Gen, Id, Comp, Tens, Asym };

struct Node;
using Diagram = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::Id;
    std::string gen;   // Gen
    Word word;         // Id
    Diagram top, bot;  // Comp: top after bot; Tens: top = left, bot = right
    int r = 0;         // Asym
    bool flipped = false, barred = false;
    Word dom, cod;
    std::string key;   // structural identity
};

// Primitive and derived generator names with their typing.
bool is_generator(const std::string& name);
bool is_primitive(const std::string& name);
Word gen_dom(const std::string& name);
Word gen_cod(const std::string& name);
// Expansion of a derived generator into primitives; empty for primitives.
std::string derived_expansion(const std::string& name);

Diagram gen(const std::string& name);
Diagram id(const Word& w);
// top o bot; throws TypeError when cod(bot) != dom(top)
Diagram comp(const Diagram& top, const Diagram& bot);
Diagram tens(const Diagram& left, const Diagram& right);
Diagram asym(int r, bool flipped = false, bool barred = false);
// Bottom-to-top composite of the given layers.
Diagram seq(const std::vector<Diagram>& layers);
Diagram tens_all(const std::vector<Diagram>& factors);
Word power(char c, int k);

// Grammar: expr := term {";" term}, left term at the bottom;
// term := factor {"*" factor}; factor := GEN | id(word) | asym(NAT) | (expr).
Diagram parse(const std::string& text);
std::string to_string(const Diagram& d);

// Reflection in a horizontal line (contravariant).
Diagram flip_v(const Diagram& d);
// Every crossing replaced by its inverse.
Diagram bar(const Diagram& d);

// The six rotated trivalent vertices as clockwise composites of mergeVS, and
// their counterclockwise forms.
struct Rotation {
    std::string name;
    std::string clockwise, counterclockwise;
};
const std::vector<Rotation>& rotations();

struct Term {
    Scalar c;
    Diagram d;
};
using Lin = std::vector<Term>;

}  // namespace qsb
