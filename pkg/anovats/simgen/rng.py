"""Reproducible random number streams."""

__all__ = ["RngStream", "as_generator"]

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

MAX_UINT64 = 2**64 - 1


class RngStream(BaseModel):
    """An independent random stream identified by a seed and a stream id.

    Streams with the same seed and different ids are spawned children of one seed sequence.
    A non-zero ``attempt`` spawns a further child of the stream, used to redraw a replication.

    """

    model_config = ConfigDict(frozen=True)

    seed: int = Field(ge=0, le=MAX_UINT64)
    stream_id: int = Field(default=0, ge=0, le=MAX_UINT64)
    attempt: int = Field(default=0, ge=0)

    @property
    def spawn_key(self) -> tuple[int, ...]:
        """The spawn key of the stream within its seed sequence."""
        if self.attempt == 0:
            return (self.stream_id,)
        return (self.stream_id, self.attempt)

    def generator(self) -> np.random.Generator:
        """Return a fresh generator positioned at the start of the stream."""
        sequence = np.random.SeedSequence(self.seed, spawn_key=self.spawn_key)
        return np.random.default_rng(sequence)

    def redraw(self) -> "RngStream":
        """Return the stream of the next attempt."""
        return self.model_copy(update={"attempt": self.attempt + 1})


def as_generator(rng: "RngStream | np.random.Generator") -> np.random.Generator:
    """Return a generator for a stream, or the generator itself."""
    if isinstance(rng, RngStream):
        return rng.generator()
    return rng
