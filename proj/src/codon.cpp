#include "gcdeg/codon.hpp"

#include <cctype>

namespace gcdeg {

namespace {

std::string describe_char(char ch) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isprint(u)) return std::string("'") + ch + "'";
    static constexpr char hex[] = "0123456789abcdef";
    return std::string("0x") + hex[u >> 4] + hex[u & 0xf];
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

InvalidBase::InvalidBase(char ch, std::size_t offset)
    : InvalidBase(ch, offset,
                  "invalid base " + describe_char(ch) + " at offset " + std::to_string(offset)) {}

InvalidBase::InvalidBase(char ch, std::size_t offset, const std::string& message)
    : Error(message), ch_(ch), offset_(offset) {}

WrongLength::WrongLength(std::size_t expected, std::size_t actual)
    : Error("expected " + std::to_string(expected) + " bases, got " + std::to_string(actual)),
      expected_(expected), actual_(actual) {}

Base parse_base(char ch, std::size_t offset) {
    switch (ch) {
    case 'U': case 'u':
    case 'T': case 't':
        return Base::U;
    case 'C': case 'c': return Base::C;
    case 'A': case 'a': return Base::A;
    case 'G': case 'g': return Base::G;
    default: throw InvalidBase(ch, offset);
    }
}

char letter(MolecularType mt) noexcept { return mt == MolecularType::Y ? 'Y' : 'R'; }
char digit(HBonds nhb) noexcept { return nhb == HBonds::Two ? '2' : '3'; }

std::string_view to_string(Character c) noexcept {
    return c == Character::Discriminating ? "D" : "non-D";
}

std::string_view to_string(Coherence c) noexcept {
    return c == Coherence::Coherent ? "coherent" : "non-coherent";
}

std::string Codon::str() const {
    return {letter(bases_[0]), letter(bases_[1]), letter(bases_[2])};
}

std::string DiBase::str() const { return {letter(b1_), letter(b2_), '-'}; }

std::array<Codon, Codon::kCount> all_codons() noexcept {
    std::array<Codon, Codon::kCount> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Codon::from_index(i);
    return out;
}

std::array<DiBase, DiBase::kCount> all_dibases() noexcept {
    std::array<DiBase, DiBase::kCount> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = DiBase::from_index(i);
    return out;
}

Codon parse_codon(std::string_view text) {
    const auto t = trim(text);
    if (t.size() != 3) throw WrongLength(3, t.size());
    const auto lead = static_cast<std::size_t>(t.data() - text.data());
    const Base b1 = parse_base(t[0], lead);
    const Base b2 = parse_base(t[1], lead + 1);
    return Codon(b1, b2, parse_base(t[2], lead + 2));
}

DiBase parse_dibase(std::string_view text) {
    auto t = trim(text);
    const auto lead = static_cast<std::size_t>(t.data() - text.data());
    if (t.size() == 3 && t[2] == '-') t.remove_suffix(1);
    if (t.size() != 2) throw WrongLength(2, t.size());
    const Base b1 = parse_base(t[0], lead);
    return DiBase(b1, parse_base(t[1], lead + 1));
}

std::string SlotId::str() const {
    return "(" + std::to_string(position) + (kind == SlotKind::MolecularType ? ",mT)" : ",nHb)");
}

std::vector<SlotId> SlotSet::ids() const {
    std::vector<SlotId> out;
    for (std::size_t i = 0; i < kSlotCount; ++i)
        if ((mask_ >> i) & 1u) out.push_back(SlotId::from_index(i));
    return out;
}

std::string SlotSet::str() const {
    if (empty()) return "{}";
    std::string out;
    for (const auto& id : ids()) {
        if (!out.empty()) out += ' ';
        out += id.str();
    }
    return out;
}

std::string format_signature(const PropertyVector& v) {
    std::string out;
    for (int p = 1; p <= 3; ++p) {
        if (p > 1) out += ' ';
        const auto d = v.at(p);
        out += letter(d.mt);
        out += '/';
        out += digit(d.nhb);
    }
    return out;
}

PropertyVector parse_signature(std::string_view text) {
    std::array<DualDescriptor, 3> positions{};
    std::size_t i = 0;
    auto skip_blanks = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const char* what) -> Error {
        return Error(std::string("malformed signature '") + std::string(text) + "': " + what);
    };
    for (auto& d : positions) {
        skip_blanks();
        if (i + 3 > text.size()) throw fail("too short");
        switch (text[i]) {
        case 'Y': d.mt = MolecularType::Y; break;
        case 'R': d.mt = MolecularType::R; break;
        default: throw fail("expected Y or R");
        }
        if (text[i + 1] != '/') throw fail("expected '/'");
        switch (text[i + 2]) {
        case '2': d.nhb = HBonds::Two; break;
        case '3': d.nhb = HBonds::Three; break;
        default: throw fail("expected 2 or 3");
        }
        i += 3;
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw fail("expected whitespace between positions");
    }
    skip_blanks();
    if (i != text.size()) throw fail("trailing characters");
    return PropertyVector(positions);
}

}  // namespace gcdeg
