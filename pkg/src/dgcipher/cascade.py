"""The dual-group cascade cipher.

Each letter of a message is routed by position parity to one of two
pipelines (odd one-based positions to GROUP1, even to GROUP2). A pipeline
pushes the letter through its three stage alphabets in order, then the
shared final alphabet replaces the result with its cyclic predecessor in
that row: find the staged letter in the final row and emit the letter one
position earlier, wrapping from the first position to the last.

Because every step is a fixed bijection, each group collapses to a single
composite permutation; the whole cipher is a two-alphabet periodic
substitution, which composite_table() makes explicit.

Passthrough characters are copied verbatim and, in ALL_CHARS mode, still
advance the position counter; in LETTERS_ONLY mode only letters advance
it. Case survives: lowercase plaintext letters come back as lowercase
ciphertext letters.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .keyset import CascadeKeySet, SubstitutionAlphabet
from .text_model import (
    ALPHABET,
    ALPHABET_SIZE,
    Group,
    IndexMode,
    LetterUnit,
    group_for_position,
    to_canonical,
    to_lower_tr,
)


def encrypt_letter(letter: str, group: Group, keyset: CascadeKeySet) -> str:
    """Encrypt one canonical letter through the given group's pipeline."""
    stage1, stage2, stage3 = keyset.stages(group)
    staged = stage3.image_of(stage2.image_of(stage1.image_of(letter)))
    final = keyset.final
    return final.letter_at((final.position_of(staged) - 1) % ALPHABET_SIZE)


def decrypt_letter(letter: str, group: Group, keyset: CascadeKeySet) -> str:
    """Invert encrypt_letter: successor in the final row, then unwind the stages."""
    final = keyset.final
    staged = final.letter_at((final.position_of(letter) + 1) % ALPHABET_SIZE)
    stage1, stage2, stage3 = keyset.stages(group)
    return stage1.preimage_of(stage2.preimage_of(stage3.preimage_of(staged)))


def transform_stream(
    chunks: Iterable[str],
    keyset: CascadeKeySet,
    mode: IndexMode = IndexMode.ALL_CHARS,
    *,
    decrypt: bool = False,
) -> Iterator[str]:
    """Transform a message delivered in chunks, yielding output chunks.

    The position counters are global across the stream: one stream is one
    message, however it is split, so memory use is bounded by chunk size.
    """
    step = decrypt_letter if decrypt else encrypt_letter
    position = 0
    letter_ordinal = 0
    for chunk in chunks:
        out: list[str] = []
        for char in chunk:
            unit = to_canonical(char)
            if isinstance(unit, LetterUnit):
                group = group_for_position(position, mode, letter_ordinal)
                image = step(unit.letter, group, keyset)
                out.append(to_lower_tr(image) if unit.was_lowercase else image)
                letter_ordinal += 1
            else:
                out.append(unit.raw)
            position += 1
        yield "".join(out)


def encrypt_message(
    message: str, keyset: CascadeKeySet, mode: IndexMode = IndexMode.ALL_CHARS
) -> str:
    """Encrypt a whole message, preserving passthrough characters and case."""
    return "".join(transform_stream([message], keyset, mode))


def decrypt_message(
    message: str, keyset: CascadeKeySet, mode: IndexMode = IndexMode.ALL_CHARS
) -> str:
    """Invert encrypt_message under the same keyset and index mode."""
    return "".join(transform_stream([message], keyset, mode, decrypt=True))


def composite_table(group: Group, keyset: CascadeKeySet) -> SubstitutionAlphabet:
    """Collapse one group's full pipeline into a single substitution alphabet.

    Constructing the result revalidates that the pipeline is a bijection.
    """
    return SubstitutionAlphabet(
        "".join(encrypt_letter(letter, group, keyset) for letter in ALPHABET)
    )
