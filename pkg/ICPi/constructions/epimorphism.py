#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from typing import Optional, Sequence

import numpy as np

from ..errors import ContainmentError, DegreeMismatchError, ICPiError
from ..perm.group import Group
from ..perm.permutation import POINT_DTYPE, Permutation
from ..perm.stabilizer_chain import StabilizerChain

logger = logging.getLogger(__name__)


class _GraphSifter:
    """Evaluates a homomorphism from the graph group ``{(x, f(x))}``.

    The graph group acts on ``n + m`` points; its chain starts with the
    ``n`` points of the first block, so sifting ``(g, 1)`` leaves a residue
    whose second block is ``f(g)^-1``.
    """

    def __init__(self, first: Sequence[np.ndarray], second: Sequence[np.ndarray], n: int, m: int) -> None:
        self.n = n
        self.m = m
        gens = [np.concatenate([a, b + n]) for a, b in zip(first, second)]
        self.chain = StabilizerChain(n + m, gens, base_prefix=range(n))

    def evaluate(self, g: np.ndarray) -> Optional[np.ndarray]:
        word = np.concatenate([np.asarray(g, dtype=POINT_DTYPE), np.arange(self.n, self.n + self.m)])
        residue, level = self.chain.strip(word)
        if level < self.n or not np.array_equal(residue[:self.n], np.arange(self.n)):
            return None
        return np.argsort(residue[self.n:] - self.n, kind='stable').astype(POINT_DTYPE)

    def kernel_generators(self) -> list:
        """Second-block parts of the strong generators below the first-block levels."""
        result = []
        for level in range(self.n, len(self.chain.base)):
            for s in self.chain.strong_generators[level]:
                result.append(s[self.n:] - self.n)
        return result


class Epimorphism:
    """Surjective homomorphism given by the images of the domain generators.

    Attributes:
        domain (Group): Source group.
        codomain (Group): Target group, the image of ``domain``.
        images (tuple): ``images[i]`` is the image of ``domain.generators[i]``.
    """

    def __init__(self, domain: Group, codomain: Group, images: Sequence[Permutation],
                 kernel: Optional[Group] = None, check: bool = True) -> None:
        """
        Args:
            domain (Group): Source group.
            codomain (Group): Target group.
            images (Sequence[Permutation]): Images of the domain generators, in order.
            kernel (Group, optional): Kernel, when known to the caller.
            check (bool): Verify that the images define a surjective homomorphism.

        Raises:
            ICPiError: If ``check`` is set and the map is not a surjective homomorphism.
        """
        images = tuple(images)
        if len(images) != len(domain.generators):
            raise ICPiError("one image per domain generator is required")
        for image in images:
            if image.degree != codomain.degree:
                raise DegreeMismatchError(codomain.degree, image.degree)
        self.domain = domain
        self.codomain = codomain
        self.images = images
        self._kernel = kernel
        self._forward = None
        self._backward = None
        self._identity = False
        if check:
            graph_order = self._forward_sifter().chain.order()
            if graph_order != domain.order:
                raise ICPiError("generator images do not define a homomorphism")
            if Group(codomain.degree, images).order != codomain.order:
                raise ICPiError("generator images do not generate the codomain")

    @classmethod
    def from_images(cls, domain: Group, images: Sequence[Permutation], codomain_degree: Optional[int] = None) -> 'Epimorphism':
        """Homomorphism onto the subgroup generated by ``images``.

        Raises:
            ICPiError: If the images do not define a homomorphism.
        """
        degree = codomain_degree if codomain_degree is not None else (images[0].degree if images else 1)
        return cls(domain, Group(degree, images), images)

    @classmethod
    def identity(cls, G: Group) -> 'Epimorphism':
        epi = cls(G, G, G.generators, kernel=Group(G.degree), check=False)
        epi._identity = True
        return epi

    def _forward_sifter(self) -> _GraphSifter:
        if self._forward is None:
            self._forward = _GraphSifter([g.images for g in self.domain.generators],
                                         [g.images for g in self.images],
                                         self.domain.degree, self.codomain.degree)
        return self._forward

    def _backward_sifter(self) -> _GraphSifter:
        if self._backward is None:
            self._backward = _GraphSifter([g.images for g in self.images],
                                          [g.images for g in self.domain.generators],
                                          self.codomain.degree, self.domain.degree)
        return self._backward

    def __call__(self, g: Permutation) -> Permutation:
        """Image of an element of the domain.

        Raises:
            ContainmentError: If ``g`` is not in the domain.
        """
        if self._identity:
            if not self.domain.contains(g):
                raise ContainmentError(f"{g} is not in the domain")
            return g
        if g.degree != self.domain.degree:
            raise DegreeMismatchError(self.domain.degree, g.degree)
        image = self._forward_sifter().evaluate(g.images)
        if image is None:
            raise ContainmentError(f"{g} is not in the domain")
        return Permutation._from_array(image)

    def lift(self, q: Permutation) -> Permutation:
        """Some preimage of the codomain element ``q``."""
        if self._identity:
            return q
        preimage = self._backward_sifter().evaluate(q.images)
        if preimage is None:
            raise ContainmentError(f"{q} is not in the codomain")
        return Permutation._from_array(preimage)

    @property
    def kernel(self) -> Group:
        if self._kernel is None:
            gens = [Permutation._from_array(k) for k in self._backward_sifter().kernel_generators()]
            self._kernel = Group(self.domain.degree, gens)
        return self._kernel

    def image(self, H: Group) -> Group:
        """Image ``f(H)`` of a subgroup of the domain; for quotients this is ``HN/N``."""
        if self._identity:
            return H
        return Group(self.codomain.degree, [self(h) for h in H.generators])

    def preimage(self, S: Group) -> Group:
        """Full preimage of a subgroup of the codomain."""
        if self._identity:
            return S
        return Group(self.domain.degree, list(self.kernel.generators) + [self.lift(s) for s in S.generators])
