"""Polished Marble 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.958,
    "detail": 3,
    "roughness": 0.693,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
