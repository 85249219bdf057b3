"""River Silt 09 Material generator (Materials)."""

PARAMS = {
    "size": 3.168,
    "detail": 3,
    "roughness": 0.907,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
