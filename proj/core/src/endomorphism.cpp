#include "wagner/endomorphism.hpp"

#include <sstream>
#include <utility>

namespace wagner {
namespace {

// Appends l to a partially built reduced word, cancelling at the boundary.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Endomorphism::Endomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw DomainError("endomorphism rank must be >= 1");
  if (images_.size() != static_cast<std::size_t>(rank)) {
    std::ostringstream msg;
    msg << "endomorphism of rank " << rank << " needs " << rank << " images, got "
        << images_.size();
    throw RankMismatchError(msg.str());
  }
  for (const Word& w : images_) {
    if (w.max_generator() > rank) {
      std::ostringstream msg;
      msg << "image uses generator " << w.max_generator() << " beyond rank " << rank;
      throw RankMismatchError(msg.str());
    }
  }
}

Endomorphism Endomorphism::identity(int rank) {
  if (rank < 1) throw DomainError("endomorphism rank must be >= 1");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    images.push_back(Word::from_reduced({Letter(i, 1)}));
  }
  return Endomorphism(rank, std::move(images));
}

const Word& Endomorphism::image(int generator) const {
  if (generator < 1 || generator > rank_) {
    std::ostringstream msg;
    msg << "generator " << generator << " out of range for rank " << rank_;
    throw RankMismatchError(msg.str());
  }
  return images_[static_cast<std::size_t>(generator - 1)];
}

Word Endomorphism::apply(const Word& w, std::size_t length_cap) const {
  if (w.max_generator() > rank_) {
    std::ostringstream msg;
    msg << "word uses generator " << w.max_generator() << " beyond rank " << rank_;
    throw RankMismatchError(msg.str());
  }
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& img = images_[static_cast<std::size_t>(l.generator() - 1)];
    if (l.sign() > 0) {
      for (Letter x : img.letters()) push_reduced(out, x);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        push_reduced(out, it->inverse());
      }
    }
    if (out.size() > length_cap) {
      std::ostringstream msg;
      msg << "image length exceeded cap " << length_cap;
      throw CapExceededError(msg.str(), 1, length_cap);
    }
  }
  return Word::from_reduced(std::move(out));
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi,
                     std::size_t length_cap) {
  if (phi.rank() != psi.rank()) {
    throw RankMismatchError("cannot compose endomorphisms of different ranks");
  }
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(phi.rank()));
  for (int i = 1; i <= psi.rank(); ++i) {
    images.push_back(phi.apply(psi.image(i), length_cap));
  }
  return Endomorphism(phi.rank(), std::move(images));
}

Endomorphism iterate(const Endomorphism& phi, int n, std::size_t length_cap) {
  if (n < 0) throw DomainError("iterate power must be >= 0");
  Endomorphism result = Endomorphism::identity(phi.rank());
  for (int k = 1; k <= n; ++k) {
    try {
      result = compose(phi, result, length_cap);
    } catch (const CapExceededError&) {
      std::ostringstream msg;
      msg << "iterate: image length exceeded cap " << length_cap << " at power " << k;
      throw CapExceededError(msg.str(), k, length_cap);
    }
  }
  return result;
}

}  // namespace wagner
