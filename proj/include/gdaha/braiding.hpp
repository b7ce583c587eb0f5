#pragma once

#include "gdaha/linalg.hpp"
#include "gdaha/scalar_field.hpp"

#include <stdexcept>
#include <vector>

namespace gdaha {

/// Flipped braiding on C^N ox C^N for the vector module (0-based letters a, b):
///   e_a ox e_a -> q^{1-1/N} e_a ox e_a
///   e_a ox e_b -> q^{-1/N} e_b ox e_a                          (a < b)
///   e_b ox e_a -> q^{-1/N} (e_a ox e_b + (q - q^{-1}) e_b ox e_a)   (a < b)
/// Requires N | root order so that q^{1/N} exists.
inline Matrix<Scalar> elementary_braiding(int N, const ScalarField& field) {
    const Scalar qN = field.q_pow(Rational(-1, N));  // q^{-1/N}
    const Scalar qdiff = field.q() - field.q().inverse();
    Matrix<Scalar> r(N * N, N * N);
    auto idx = [N](int x, int y) { return x * N + y; };
    for (int a = 0; a < N; ++a) {
        r(idx(a, a), idx(a, a)) = qN * field.q();
        for (int b = a + 1; b < N; ++b) {
            r(idx(b, a), idx(a, b)) = qN;
            r(idx(a, b), idx(b, a)) = qN;
            r(idx(b, a), idx(b, a)) = qN * qdiff;
        }
    }
    return r;
}

/// Inverse via the Hecke identity: with S = q^{1/N} R, S^{-1} = S - (q - q^{-1}),
/// so R^{-1} = q^{1/N} (q^{1/N} R - (q - q^{-1})).
inline Matrix<Scalar> elementary_braiding_inverse(int N, const ScalarField& field) {
    const Scalar qN = field.q_pow(Rational(1, N));
    const Scalar qdiff = field.q() - field.q().inverse();
    const Matrix<Scalar> r = elementary_braiding(N, field);
    return qN * ((qN * r) - (qdiff * Matrix<Scalar>::identity(N * N)));
}

/// Braid word on a fixed number of strands. Letters are +i / -i for the
/// positive / inverse crossing of strands i, i+1 (1-based); the first letter
/// in the list acts first on vectors, so the operator matrix is the product
/// of the letter matrices taken right to left through the word.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;
};

inline Matrix<Scalar> braid_word_operator(const BraidWord& w, int N, const ScalarField& field) {
    int dim = 1;
    for (int s = 0; s < w.strands; ++s) dim *= N;
    const Matrix<Scalar> id1 = Matrix<Scalar>::identity(N);
    const Matrix<Scalar> rpos = elementary_braiding(N, field);
    const Matrix<Scalar> rneg = elementary_braiding_inverse(N, field);
    Matrix<Scalar> total = Matrix<Scalar>::identity(dim);
    for (int letter : w.letters) {
        if (letter == 0 || std::abs(letter) >= w.strands)
            throw std::invalid_argument("braid_word_operator: letter out of range");
        const int pos = std::abs(letter);
        Matrix<Scalar> m = Matrix<Scalar>::identity(1);
        for (int s = 1; s <= w.strands;) {
            if (s == pos) {
                m = kron(m, letter > 0 ? rpos : rneg);
                s += 2;
            } else {
                m = kron(m, id1);
                s += 1;
            }
        }
        total = m * total;
    }
    return total;
}

/// Consecutive blocks of strands; sizes may be zero (empty blocks braid
/// trivially, realizing tensor factors carried by one-dimensional modules).
struct BlockStructure {
    std::vector<int> sizes;

    int strands() const {
        int t = 0;
        for (int s : sizes) t += s;
        return t;
    }
    int offset(int block) const {  // strands before 1-based block
        int t = 0;
        for (int b = 0; b < block - 1; ++b) t += sizes[b];
        return t;
    }
};

/// Positive word exchanging blocks i and i+1 (block i crosses over block i+1),
/// letters in acting order. Derived from the cabling identities: the rightmost
/// strand of the left block crosses the whole right block first.
inline BraidWord block_transposition_word(const BlockStructure& blocks, int i) {
    if (i < 1 || i >= static_cast<int>(blocks.sizes.size()))
        throw std::invalid_argument("block_transposition_word: block index out of range");
    for (int s : blocks.sizes)
        if (s < 0) throw std::invalid_argument("block_transposition_word: negative block size");
    const int p = blocks.offset(i);
    const int a = blocks.sizes[i - 1], b = blocks.sizes[i];
    BraidWord w;
    w.strands = blocks.strands();
    for (int r = 0; r < a; ++r)
        for (int t = 0; t < b; ++t) w.letters.push_back(p + a - r + t);
    return w;
}

/// Word over block positions with evolving block sizes. sign +1 applies the
/// block transposition; sign -1 applies the inverse of the transposition that
/// would restore the current order. Both swap the block sizes in place.
struct BlockLetter {
    int pos = 0;   // 1-based block position
    int sign = 1;  // +1 or -1
};

inline BraidWord block_word(BlockStructure blocks, const std::vector<BlockLetter>& letters) {
    BraidWord w;
    w.strands = blocks.strands();
    for (const auto& [pos, sign] : letters) {
        if (pos < 1 || pos >= static_cast<int>(blocks.sizes.size()))
            throw std::invalid_argument("block_word: block position out of range");
        if (sign == 1) {
            const BraidWord frag = block_transposition_word(blocks, pos);
            w.letters.insert(w.letters.end(), frag.letters.begin(), frag.letters.end());
        } else if (sign == -1) {
            // Inverse of the braiding that maps the swapped order back.
            BlockStructure swapped = blocks;
            std::swap(swapped.sizes[pos - 1], swapped.sizes[pos]);
            const BraidWord frag = block_transposition_word(swapped, pos);
            for (auto it = frag.letters.rbegin(); it != frag.letters.rend(); ++it)
                w.letters.push_back(-*it);
        } else {
            throw std::invalid_argument("block_word: sign must be +1 or -1");
        }
        std::swap(blocks.sizes[pos - 1], blocks.sizes[pos]);
    }
    return w;
}

inline Matrix<Scalar> block_word_operator(const BlockStructure& blocks, const std::vector<BlockLetter>& letters,
                                          int N, const ScalarField& field) {
    return braid_word_operator(block_word(blocks, letters), N, field);
}

}  // namespace gdaha
