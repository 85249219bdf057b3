"""Polished Marble 07 Material generator (Materials)."""

PARAMS = {
    "size": 0.432,
    "detail": 4,
    "roughness": 0.281,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
