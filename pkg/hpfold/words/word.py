"""
Words over {0,1,2}: 0 is hydrophobic (H), 1 polar (P), 2 strongly hydrophobic
"""
from typing import List

from pydantic import BaseModel, ConfigDict, field_validator

from hpfold.errors import InputError
from hpfold.notation import expand

ALPHABET = "012"
CYCLIC_PREFIX = "cyc:"


class Word(BaseModel):
    """
    A finite word. Cyclic words are scored with wraparound chain adjacency,
    so their first and last letters are consecutive.
    """
    model_config = ConfigDict(frozen=True)

    letters: str
    cyclic: bool = False

    @field_validator("letters")
    @classmethod
    def _check_letters(cls, value: str) -> str:
        if not value:
            raise ValueError("word must be nonempty")
        bad = set(value) - set(ALPHABET)
        if bad:
            raise ValueError(f"word letters must be in {{0,1,2}}, got {sorted(bad)}")
        return value

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse "0110", "cyc:0^8" or "(011)^3 1^10" style text"""
        text = text.strip()
        cyclic = text.startswith(CYCLIC_PREFIX)
        if cyclic:
            text = text[len(CYCLIC_PREFIX):]
        letters = expand(text, ALPHABET)
        if not letters:
            raise InputError("Empty word")
        return cls(letters=letters, cyclic=cyclic)

    def digits(self) -> List[int]:
        return [int(c) for c in self.letters]

    def has_level_two(self) -> bool:
        return "2" in self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, index: int) -> str:
        return self.letters[index]

    def __str__(self) -> str:
        return f"{CYCLIC_PREFIX if self.cyclic else ''}{self.letters}"
