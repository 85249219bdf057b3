"""Cracked Clay 06 Material generator (Materials)."""

PARAMS = {
    "size": 2.27,
    "detail": 1,
    "roughness": 0.041,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
