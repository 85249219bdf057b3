"""Cracked Clay 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.426,
    "detail": 1,
    "roughness": 0.948,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
