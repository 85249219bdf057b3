"""Polished Marble 03 Material generator (Materials)."""

PARAMS = {
    "size": 1.268,
    "detail": 2,
    "roughness": 0.135,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
