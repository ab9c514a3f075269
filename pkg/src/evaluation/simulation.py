"""Bit-exact placement, one-shot XOR delivery and decoding."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DecodeFailureError, InvalidParametersError, ProtocolViolationError
from ..schemes import SchemeBundle
from ..utils.seeding import LIBRARY_STREAM, make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Library:
    """N files of B bytes each, as an N x B uint8 matrix."""

    files: np.ndarray

    @property
    def N(self) -> int:
        return self.files.shape[0]

    @property
    def B(self) -> int:
        return self.files.shape[1]

    def file(self, n: int) -> bytes:
        """File n, 1-based."""
        return self.files[n - 1].tobytes()


@dataclass(frozen=True, eq=False)
class PacketStore:
    """
    ``packets[n-1, f]`` is packet f of file n.

    Files are zero-padded up to F * P bytes; ``B`` keeps the original length.
    """

    packets: np.ndarray
    B: int

    @property
    def F(self) -> int:
        return self.packets.shape[1]

    @property
    def packet_size(self) -> int:
        return self.packets.shape[2]

    def packet(self, n: int, f: int) -> np.ndarray:
        return self.packets[n - 1, f]

    def reassemble(self, n: int) -> bytes:
        return self.packets[n - 1].reshape(-1)[:self.B].tobytes()


def split_library(N: int, B: int, F: int, seed: int) -> Tuple[Library, PacketStore]:
    """
    Draw N pseudo-random files and cut each into F equal packets.

    Args:
        N: Number of files
        B: File size in bytes
        F: Packets per file
        seed: Seed of the library stream

    Returns:
        (Library, PacketStore)
    """
    if N < 1 or B < 1 or F < 1:
        raise InvalidParametersError(f"N, B and F must be positive, got N={N}, B={B}, F={F}")
    rng = make_rng(seed, LIBRARY_STREAM)
    files = rng.integers(0, 256, size=(N, B), dtype=np.uint8)
    size = -(-B // F)
    padded = np.zeros((N, F * size), dtype=np.uint8)
    padded[:, :B] = files
    store = PacketStore(packets=padded.reshape(N, F, size), B=B)
    store.packets.setflags(write=False)
    return Library(files=files), store


@dataclass(frozen=True)
class DemandVector:
    """d[k] is the file (1-based) requested by user k."""

    d: Tuple[int, ...]
    N: int

    def __post_init__(self):
        if not self.d:
            raise InvalidParametersError("a demand vector needs at least one user")
        if any(not 1 <= n <= self.N for n in self.d):
            raise InvalidParametersError(f"demands must lie in 1..{self.N}, got {list(self.d)}")

    @property
    def K(self) -> int:
        return len(self.d)

    @property
    def distinct(self) -> bool:
        return len(set(self.d)) == len(self.d)

    def __getitem__(self, k: int) -> int:
        return self.d[k]

    @classmethod
    def worst(cls, K: int, N: int, rng: np.random.Generator) -> 'DemandVector':
        """All-distinct demands, which every scheme here serves at its full load."""
        if N < K:
            raise InvalidParametersError(f"distinct demands need N >= K, got N={N}, K={K}")
        return cls(d=tuple(int(n) + 1 for n in rng.permutation(N)[:K]), N=N)

    @classmethod
    def uniform(cls, K: int, N: int, rng: np.random.Generator) -> 'DemandVector':
        return cls(d=tuple(int(n) for n in rng.integers(1, N + 1, size=K)), N=N)

    @classmethod
    def parse(cls, text: str, N: int) -> 'DemandVector':
        try:
            values = tuple(int(token) for token in text.replace(',', ' ').split())
        except ValueError as exc:
            raise InvalidParametersError(f"demands must be integers, got '{text}'") from exc
        return cls(d=values, N=N)


@dataclass(frozen=True)
class CacheContents:
    """
    What every cache node stores after placement.

    ``store[c][f]`` is the N x P block of packet row f of all files at node c.
    """

    store: Tuple[Dict[int, np.ndarray], ...]
    packet_size: int

    def size(self, node: int) -> int:
        """Stored packet rows per file."""
        return len(self.store[node])

    def rows(self, node: int) -> Tuple[int, ...]:
        return tuple(sorted(self.store[node]))

    def lookup(self, nodes: Sequence[int], n: int, f: int) -> Optional[np.ndarray]:
        """Packet (n, f) from the first node in ``nodes`` that has it."""
        for node in nodes:
            block = self.store[node].get(f)
            if block is not None:
                return block[n - 1]
        return None


def place(bundle: SchemeBundle, packets: PacketStore) -> CacheContents:
    """Fill every cache node with the packet rows its placement column stars."""
    if packets.F != bundle.placement.F:
        raise InvalidParametersError(
            f"packets are split into F={packets.F}, the placement array has F={bundle.placement.F}")
    stars = bundle.placement.stars
    store = tuple(
        {f: packets.packets[:, f] for f in np.flatnonzero(stars[:, node]).tolist()}
        for node in range(bundle.placement.gamma)
    )
    return CacheContents(store=store, packet_size=packets.packet_size)


@dataclass(frozen=True)
class Transmission:
    label: int
    sender: int
    payload: bytes
    # (file, row) of every XOR-ed packet, in the label's row-major cell order
    contributions: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class TransmissionLog:
    transmissions: Tuple[Transmission, ...]
    F: int

    @property
    def count(self) -> int:
        return len(self.transmissions)

    @property
    def load(self) -> Fraction:
        return Fraction(self.count, self.F)

    def per_sender(self, K: int) -> List[int]:
        counts = Counter(tx.sender for tx in self.transmissions)
        return [counts.get(k, 0) for k in range(K)]

    def by_label(self, label: int) -> Transmission:
        return self.transmissions[label - 1]

    def schedule(self) -> Tuple[Tuple[int, int], ...]:
        """(label, sender) pairs, independent of the demand."""
        return tuple((tx.label, tx.sender) for tx in self.transmissions)


def deliver(bundle: SchemeBundle, demand: DemandVector, caches: CacheContents) -> TransmissionLog:
    """
    One transmission per label: user phi(s) XORs the demanded packets of
    every cell labeled s, reading each packet from its own caches.

    Raises:
        ProtocolViolationError: if the sender cannot read one of them
    """
    arr, phi, topology = bundle.delivery, bundle.phi, bundle.topology
    if demand.K != arr.K:
        raise InvalidParametersError(f"demand covers {demand.K} users, the scheme has K={arr.K}")
    by_label = arr.cells_by_label
    transmissions = []
    for s in range(1, arr.S + 1):
        sender = phi[s]
        nodes = topology.user_blocks[sender]
        payload = None
        contributions = []
        for j, k in by_label.get(s, ()):
            n = demand[k]
            packet = caches.lookup(nodes, n, j)
            if packet is None:
                raise ProtocolViolationError(
                    f"user {sender + 1} sends s{s} but cannot read packet ({n},{j + 1})",
                    label=s, sender=sender, row=j)
            payload = packet.copy() if payload is None else np.bitwise_xor(payload, packet)
            contributions.append((n, j))
        if payload is None:
            payload = np.zeros(caches.packet_size, dtype=np.uint8)
        transmissions.append(Transmission(label=s, sender=sender, payload=payload.tobytes(),
                                          contributions=tuple(contributions)))
    logger.debug("delivered %d transmissions for demand %s", len(transmissions), demand.d)
    return TransmissionLog(transmissions=tuple(transmissions), F=arr.F)


@dataclass(frozen=True)
class DecodeReport:
    """
    Per-user outcome.

    ``traces[k][f]`` is ``'cache'`` or the label whose transmission gave
    packet f; ``mismatch`` is (user, row) of the first wrong packet.
    """

    success: bool
    recovered: Dict[int, bytes]
    traces: Dict[int, Tuple[object, ...]] = field(default_factory=dict)
    mismatch: Optional[Tuple[int, int]] = None


def decode_all(bundle: SchemeBundle, log: TransmissionLog, demand: DemandVector,
               caches: CacheContents, packets: PacketStore, library: Library) -> DecodeReport:
    """
    Every user rebuilds its demanded file from its caches and, for each
    missing packet, the single transmission carrying its label.

    Raises:
        DecodeFailureError: when a packet cannot be recovered at all
    """
    arr, topology = bundle.delivery, bundle.topology
    recovered = {}
    traces = {}
    mismatch = None
    for k in range(arr.K):
        nodes = topology.user_blocks[k]
        wanted = demand[k]
        rows = []
        trace = []
        for j in range(arr.F):
            packet = caches.lookup(nodes, wanted, j)
            if packet is not None:
                rows.append(packet)
                trace.append('cache')
                continue
            s = int(arr.cells[j, k])
            if s == 0:
                raise DecodeFailureError(
                    f"user {k + 1} has a star at row {j + 1} but no cache holds it", user=k, row=j)
            tx = log.by_label(s)
            value = np.frombuffer(tx.payload, dtype=np.uint8).copy()
            own = 0
            for (n, f) in tx.contributions:
                if (n, f) == (wanted, j) and own == 0:
                    own += 1
                    continue
                other = caches.lookup(nodes, n, f)
                if other is None:
                    raise DecodeFailureError(
                        f"user {k + 1} cannot cancel packet ({n},{f + 1}) from s{s}",
                        user=k, row=j, label=s)
                value ^= other
            if own == 0:
                raise DecodeFailureError(f"transmission s{s} does not carry row {j + 1} of file {wanted}",
                                         user=k, row=j, label=s)
            rows.append(value)
            trace.append(s)
        data = np.concatenate(rows)[:packets.B].tobytes()
        recovered[k] = data
        traces[k] = tuple(trace)
        if mismatch is None and data != library.file(wanted):
            size = packets.packet_size
            wrong = np.flatnonzero(np.frombuffer(data, dtype=np.uint8)
                                   != library.files[wanted - 1])[0]
            mismatch = (k, int(wrong) // size)
    if mismatch is not None:
        logger.warning("user %d decoded a wrong packet in row %d", mismatch[0] + 1, mismatch[1] + 1)
    return DecodeReport(success=mismatch is None, recovered=recovered, traces=traces, mismatch=mismatch)
