from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union


@dataclass(frozen=True)
class Text:
    """Text node; content never contains '<' or '>'"""
    content: str

    def to_dict(self) -> Dict:
        return {"text": self.content}


@dataclass(frozen=True)
class Element:
    """NLML element: a tag and ordered children"""
    tag: str
    children: Tuple["Node", ...] = ()

    @property
    def text(self) -> str:
        """Concatenated direct text children"""
        return " ".join(c.content for c in self.children if isinstance(c, Text))

    @property
    def elements(self) -> List["Element"]:
        return [c for c in self.children if isinstance(c, Element)]

    def find(self, tag: str) -> Optional["Element"]:
        """First direct child element with the tag"""
        for child in self.children:
            if isinstance(child, Element) and child.tag == tag:
                return child
        return None

    def find_all(self, tag: str) -> List["Element"]:
        return [c for c in self.children if isinstance(c, Element) and c.tag == tag]

    def child_text(self, tag: str) -> Optional[str]:
        found = self.find(tag)
        return found.text if found is not None else None

    def iter(self) -> Iterator["Element"]:
        """Depth-first walk over this element and all descendants"""
        yield self
        for child in self.elements:
            yield from child.iter()

    def to_dict(self) -> Dict:
        return {"tag": self.tag, "children": [c.to_dict() for c in self.children]}


Node = Union[Element, Text]


@dataclass(frozen=True)
class NlmlDocument:
    """Multi-rooted sibling sequence of elements, starting with <mood>"""
    elements: Tuple[Element, ...] = ()

    @property
    def mood(self) -> Optional[str]:
        if self.elements and self.elements[0].tag == "mood":
            return self.elements[0].text
        return None

    def find(self, tag: str) -> Optional[Element]:
        for element in self.elements:
            if element.tag == tag:
                return element
        return None

    def find_all(self, tag: str) -> List[Element]:
        return [e for e in self.elements if e.tag == tag]

    def child_text(self, tag: str) -> Optional[str]:
        found = self.find(tag)
        return found.text if found is not None else None

    def iter(self) -> Iterator[Element]:
        for element in self.elements:
            yield from element.iter()

    def to_dict(self) -> Dict:
        return {"elements": [e.to_dict() for e in self.elements]}


def el(tag: str, *children: Union[Node, str, None]) -> Element:
    """Element builder: str children become Text, None children are dropped"""
    nodes: List[Node] = []
    for child in children:
        if child is None:
            continue
        nodes.append(Text(child) if isinstance(child, str) else child)
    return Element(tag, tuple(nodes))
