"""Worn Leather 07 Material generator (Materials)."""

PARAMS = {
    "size": 0.305,
    "detail": 1,
    "roughness": 0.44,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
