"""Woven Linen 09 Material generator (Materials)."""

PARAMS = {
    "size": 0.549,
    "detail": 2,
    "roughness": 0.671,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Woven Linen 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
