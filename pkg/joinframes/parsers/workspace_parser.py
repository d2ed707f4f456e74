"""工作区文本格式解析器

按行解析，'#' 之后为注释：

    poset: nounion            # 可选
    elements: a b c d e f     # 恰好一次
    cover: a d                # 下 上，可重复
    joinspec U1: {a b} {}     # {} 表示空集，单点集自动加入
"""

import logging
import re
from typing import Any, Dict, List, Optional, Tuple, Union

from joinframes.errors import JoinSpecError, ParseError, PosetError
from joinframes.model.poset import LABEL_PATTERN, Poset, build_poset
from joinframes.model.workspace import Workspace
from joinframes.parsers.base_parser import BaseParser
from joinframes.spec.joinspec import make_joinspec

logger = logging.getLogger(__name__)

JOINSPEC_HEAD = re.compile(r"joinspec\s+([A-Za-z_][A-Za-z0-9_']*)\s*\Z")
SET_GROUP = re.compile(r"\{([^{}]*)\}")


class WorkspaceParser(BaseParser):
    """.poset 文本解析器"""

    def parse(self, content: Union[str, bytes], options: Optional[Dict[str, Any]] = None) -> Workspace:
        """解析文本为工作区

        Args:
            content: 文本内容
            options: {"source": 路径}

        Returns:
            Workspace: 含一个偏序集与若干命名连接规格

        Raises:
            ParseError: 语法错误、未知元素、环、成员没有并、无底元时出现 ∅
        """
        options = options or {}
        text = self._normalize_content(content)

        name: Optional[str] = None
        elements: Optional[Tuple[List[str], int]] = None
        covers: List[Tuple[str, str, int]] = []
        specs: List[Tuple[str, str, int]] = []

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, sep, rest = line.partition(":")
            if not sep:
                raise ParseError(f"expected 'keyword: ...', got '{line}'", number)
            head = head.strip()
            if head == "poset":
                if name is not None:
                    raise ParseError("poset name given twice", number)
                name = self._single_identifier(rest, number)
            elif head == "elements":
                if elements is not None:
                    raise ParseError("'elements:' may appear only once", number)
                labels = rest.split()
                if not labels:
                    raise ParseError("'elements:' needs at least one element", number)
                for label in labels:
                    self._check_identifier(label, number)
                elements = (labels, number)
            elif head == "cover":
                pair = rest.split()
                if len(pair) != 2:
                    raise ParseError("'cover:' takes exactly two elements, lower then upper", number)
                if pair[0] == pair[1]:
                    raise ParseError(f"cycle detected: {pair[0]} < {pair[0]}", number)
                covers.append((pair[0], pair[1], number))
            elif JOINSPEC_HEAD.match(head):
                specs.append((JOINSPEC_HEAD.match(head).group(1), rest, number))
            else:
                raise ParseError(f"unknown keyword '{head}'", number)

        if elements is None:
            raise ParseError("missing 'elements:' line")
        poset = self._build(elements, covers)
        workspace = Workspace(poset, name, options.get("source"))
        for spec_name, rest, number in specs:
            sets = self._parse_setlist(poset, rest, number)
            try:
                spec = make_joinspec(poset, sets, spec_name)
            except JoinSpecError as e:
                raise ParseError(str(e), number) from None
            workspace.add_spec(spec, number)
        logger.debug(f"parsed poset with {poset.n} elements and {len(workspace.specs)} join-specifications")
        return workspace

    def _check_identifier(self, token: str, number: int) -> None:
        if not LABEL_PATTERN.match(token):
            raise ParseError(f"invalid identifier '{token}'", number)

    def _single_identifier(self, rest: str, number: int) -> str:
        tokens = rest.split()
        if len(tokens) != 1:
            raise ParseError("expected a single name", number)
        self._check_identifier(tokens[0], number)
        return tokens[0]

    def _build(self, elements: Tuple[List[str], int], covers: List[Tuple[str, str, int]]) -> Poset:
        labels, elements_line = elements
        known = set(labels)
        if len(known) != len(labels):
            duplicate = next(label for label in labels if labels.count(label) > 1)
            raise ParseError(f"duplicate element label '{duplicate}'", elements_line)
        for lower, upper, number in covers:
            for label in (lower, upper):
                if label not in known:
                    raise ParseError(f"unknown element '{label}'", number)
        pairs = [(lower, upper) for lower, upper, _ in covers]
        try:
            return build_poset(labels, pairs)
        except PosetError as e:
            raise ParseError(str(e), self._cycle_line(labels, covers)) from None

    def _cycle_line(self, labels: List[str], covers: List[Tuple[str, str, int]]) -> Optional[int]:
        """第一条使覆盖关系出现环的 cover 行"""
        for k in range(1, len(covers) + 1):
            try:
                build_poset(labels, [(lower, upper) for lower, upper, _ in covers[:k]])
            except PosetError:
                return covers[k - 1][2]
        return None

    def _parse_setlist(self, poset: Poset, rest: str, number: int) -> List[List[str]]:
        leftover = SET_GROUP.sub(" ", rest)
        if leftover.strip():
            raise ParseError(f"expected '{{...}}' groups, found '{leftover.strip()}'", number)
        sets = []
        for group in SET_GROUP.findall(rest):
            members = group.split()
            for label in members:
                if label not in poset.index:
                    raise ParseError(f"unknown element '{label}'", number)
            sets.append(members)
        return sets
